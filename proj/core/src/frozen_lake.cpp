#include "hxplain/env/frozen_lake.hpp"

#include <algorithm>
#include <cmath>

namespace hxplain::fl {

namespace {

int manhattan(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

// Laterals of up/down are left/right and vice versa.
std::pair<Action, Action> laterals(Action a) {
    if (a == Up || a == Down) return {Left, Right};
    return {Up, Down};
}

} // namespace

void FlMap::check() const {
    if (width < 2 || height < 2) throw Error("FlMap: too small");
    if (start == goal) throw Error("FlMap: start equals goal");
    if (!in_bounds(start) || !in_bounds(goal))
        throw Error("FlMap: start/goal out of bounds");
    if (holes.empty()) throw Error("FlMap: needs at least one hole");
    if (holes.contains(start) || holes.contains(goal))
        throw Error("FlMap: start/goal in a hole");
    for (Cell h : holes)
        if (!in_bounds(h)) throw Error("FlMap: hole out of bounds");
}

FlMap map_4x4() {
    FlMap m;
    m.width = m.height = 4;
    m.start = {0, 0};
    m.goal = {3, 3};
    m.holes = {{1, 1}, {2, 3}, {3, 0}};
    return m;
}

FlMap map_8x8() {
    // Holes kept in the interior block; row 0/1 and the two rightmost
    // columns stay clear so edge routes remain survivable.
    FlMap m;
    m.width = m.height = 8;
    m.start = {0, 0};
    m.goal = {7, 7};
    m.holes = {{2, 1}, {2, 4}, {3, 2}, {3, 5}, {4, 1},
               {4, 4}, {5, 2}, {5, 5}, {6, 1}, {6, 3}};
    return m;
}

FlModel::FlModel(FlMap map) : map_(std::move(map)) {
    map_.check();
    Domain cells;
    for (int x = 0; x < map_.height; ++x)
        for (int y = 0; y < map_.width; ++y) cells.push_back(Cell{x, y});
    Domain hole_cells(map_.holes.begin(), map_.holes.end());
    Domain distances;
    for (int d = 0; d <= map_.width - 1 + map_.height - 1; ++d)
        distances.push_back(std::int64_t(d));
    Domain counts;
    for (int c = 0; c <= map_.width * map_.height; ++c)
        counts.push_back(std::int64_t(c));
    schema_ = std::make_shared<FeatureSchema>(std::vector<FeatureSchema::Feature>{
        {"P", cells},
        {"PP", cells},
        {"HP", hole_cells},
        {"PD", distances},
        {"HN", counts},
    });
}

Cell FlModel::closest_hole(Cell from) const {
    Cell best = *map_.holes.begin();
    int best_d = manhattan(from, best);
    for (Cell h : map_.holes) {
        int d = manhattan(from, h);
        if (d < best_d) { // set order is lexicographic, first min wins
            best = h;
            best_d = d;
        }
    }
    return best;
}

State FlModel::make_state(Cell p, Cell pp) const {
    return State(schema_, {p, pp, closest_hole(p),
                           std::int64_t(manhattan(p, map_.start)),
                           std::int64_t(map_.holes.size())});
}

Cell FlModel::move(Cell from, Action a) const {
    Cell to = from;
    switch (a) {
    case Up: to.x -= 1; break;
    case Down: to.x += 1; break;
    case Left: to.y -= 1; break;
    case Right: to.y += 1; break;
    case Stay: break;
    }
    return map_.in_bounds(to) ? to : from;
}

std::vector<ActionId> FlModel::actions(const State& s) const {
    if (terminal(s)) return {Stay};
    return {Up, Down, Left, Right};
}

WeightedStates FlModel::support(const State& s, ActionId a) const {
    Cell p = s.as_cell(0);
    WeightedStates out(true);
    if (terminal(s)) {
        if (a != Stay) throw IllegalAction("fl: terminal state is absorbing");
        out.add(s, Rational(1));
        return out;
    }
    if (a < Up || a > Right) throw IllegalAction("fl: unknown action");
    auto [lat1, lat2] = laterals(static_cast<Action>(a));
    out.add(make_state(move(p, static_cast<Action>(a)), p), Rational(3, 5));
    out.add(make_state(move(p, lat1), p), Rational(1, 5));
    out.add(make_state(move(p, lat2), p), Rational(1, 5));
    return out;
}

Rational FlModel::reward(const State& s, ActionId a) const {
    if (terminal(s)) return Rational(0);
    // Expected reward of entering the goal this step.
    Rational r;
    WeightedStates branch = support(s, a);
    for (const auto& [s2, pr] : branch.entries())
        if (s2.as_cell(0) == map_.goal) r += pr;
    return r;
}

bool FlModel::valid_state(const State& s) const {
    Cell p = s.as_cell(0);
    Cell pp = s.as_cell(1);
    if (!map_.in_bounds(p) || !map_.in_bounds(pp)) return false;
    if (manhattan(p, pp) > 1) return false;
    if (s.as_cell(2) != closest_hole(p)) return false;
    if (s.as_int(3) != manhattan(p, map_.start)) return false;
    return s.as_int(4) == std::int64_t(map_.holes.size());
}

std::string FlModel::action_name(ActionId a) const {
    switch (a) {
    case Up: return "up";
    case Down: return "down";
    case Left: return "left";
    case Right: return "right";
    case Stay: return "stay";
    }
    return TransitionModel::action_name(a);
}

Predicate win_predicate(const FlModel& model) {
    Cell goal = model.map().goal;
    return Predicate::native(
        {"frozen_lake", "win",
         [goal](const State& s) { return s.as_cell(0) == goal; }});
}

Predicate holes_predicate(const FlModel& model) {
    std::set<Cell> holes = model.map().holes;
    return Predicate::native(
        {"frozen_lake", "holes",
         [holes](const State& s) { return holes.contains(s.as_cell(0)); }});
}

Predicate region_predicate(const FlModel& model, std::set<Cell> cells) {
    if (cells.empty()) throw Error("fl region predicate: empty cell set");
    for (Cell c : cells)
        if (!model.map().in_bounds(c))
            throw Error("fl region predicate: cell out of bounds");
    std::string params = "{\"cells\":[";
    bool first = true;
    for (Cell c : cells) {
        if (!first) params += ",";
        first = false;
        params += "[" + std::to_string(c.x) + "," + std::to_string(c.y) + "]";
    }
    params += "]}";
    return Predicate::native(
        {"frozen_lake", "region",
         [cells = std::move(cells)](const State& s) {
             return cells.contains(s.as_cell(0));
         },
         params});
}

Predicate make_predicate(const FlModel& model, const std::string& name,
                         const std::set<Cell>& region_cells) {
    if (name == "win") return win_predicate(model);
    if (name == "holes") return holes_predicate(model);
    if (name == "region") return region_predicate(model, region_cells);
    throw UnknownPredicate("fl: unknown predicate " + name);
}

ActionId QTablePolicy::action(const State& s) const {
    Cell p = s.as_cell(0);
    auto it = q_.find(p);
    if (it == q_.end()) return Stay; // terminal cells are absorbing

    const auto& q = it->second;
    int best = 0;
    for (int a = 1; a < 4; ++a)
        if (q[a] > q[best]) best = a;
    return best;
}

namespace {

Cell sample_next(const FlModel& model, Cell p, ActionId a, Rng& rng) {
    auto [lat1, lat2] = laterals(static_cast<Action>(a));
    double u = rng.next_unit();
    Action dir = static_cast<Action>(a);
    if (u >= 0.6) dir = (u < 0.8) ? lat1 : lat2;
    return model.move(p, dir);
}

} // namespace

QTablePolicy train_q(const FlModel& model, const TrainParams& params) {
    std::map<Cell, std::array<double, 4>> q;
    const FlMap& map = model.map();
    for (int x = 0; x < map.height; ++x)
        for (int y = 0; y < map.width; ++y)
            if (!model.terminal_cell({x, y})) q[{x, y}] = {0, 0, 0, 0};

    Rng rng = Rng::substream(params.seed, "train");
    const int step_cap = 4 * map.width * map.height;
    for (std::uint64_t ep = 0; ep < params.episodes; ++ep) {
        double frac = params.episodes > 1
                          ? double(ep) / double(params.episodes - 1)
                          : 1.0;
        double eps = params.epsilon_start +
                     (params.epsilon_end - params.epsilon_start) * frac;
        Cell p = map.start;
        for (int step = 0; step < step_cap; ++step) {
            auto& qp = q[p];
            int a;
            if (rng.next_unit() < eps) {
                a = int(rng.next_below(4));
            } else {
                a = 0;
                for (int b = 1; b < 4; ++b)
                    if (qp[b] > qp[a]) a = b;
            }
            Cell p2 = sample_next(model, p, a, rng);
            double reward = p2 == map.goal ? 1.0 : 0.0;
            double target = reward;
            if (!model.terminal_cell(p2)) {
                const auto& qn = q[p2];
                target += params.gamma * *std::max_element(qn.begin(), qn.end());
            }
            q[p][a] += params.alpha * (target - q[p][a]);
            p = p2;
            if (model.terminal_cell(p)) break;
        }
    }
    return QTablePolicy(std::move(q), params.seed);
}

} // namespace hxplain::fl

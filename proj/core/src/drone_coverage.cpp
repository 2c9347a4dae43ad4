#include "hxplain/env/drone_coverage.hpp"

#include <algorithm>
#include <cmath>

namespace hxplain::dc {

namespace {

bool in_bounds(Cell c) {
    return 0 <= c.x && c.x < kSize && 0 <= c.y && c.y < kSize;
}

Cell step(Cell from, Action a) {
    Cell to = from;
    switch (a) {
    case Up: to.x -= 1; break;
    case Down: to.x += 1; break;
    case Left: to.y -= 1; break;
    case Right: to.y += 1; break;
    case Stop: break;
    }
    return in_bounds(to) ? to : from;
}

Action opposite(Action a) {
    switch (a) {
    case Up: return Down;
    case Down: return Up;
    case Left: return Right;
    case Right: return Left;
    default: return Stop;
    }
}

// Wind distribution: left 1/10, down 1/5, right 2/5, up 3/10. The
// direction opposite to the agent's move collapses to no displacement;
// Stop suppresses all wind.
struct WindOutcome {
    Action dir; // Stop = no displacement
    Rational prob;
};

std::vector<WindOutcome> wind_outcomes(Action action) {
    if (action == Stop) return {{Stop, Rational(1)}};
    const std::pair<Action, Rational> base[] = {
        {Left, Rational(1, 10)},
        {Down, Rational(1, 5)},
        {Right, Rational(2, 5)},
        {Up, Rational(3, 10)},
    };
    std::vector<WindOutcome> out;
    for (const auto& [dir, pr] : base)
        out.push_back({dir == opposite(action) ? Stop : dir, pr});
    return out;
}

int view_index(int dx, int dy) {
    return (dx + kViewRadius) * (2 * kViewRadius + 1) + (dy + kViewRadius);
}

int quadrant_of(Cell c) { return (c.x >= 5 ? 2 : 0) + (c.y >= 5 ? 1 : 0); }

} // namespace

void DcWorld::check() const {
    for (Cell t : trees)
        if (!in_bounds(t)) throw Error("dc: tree out of bounds");
    for (int i = 0; i < kDrones; ++i) {
        if (!in_bounds(drones[i])) throw Error("dc: drone out of bounds");
        if (trees.contains(drones[i])) throw Error("dc: drone on a tree");
        for (int j = i + 1; j < kDrones; ++j)
            if (drones[i] == drones[j]) throw Error("dc: drones overlap");
    }
    if (ego < 0 || ego >= kDrones) throw Error("dc: bad ego index");
}

DcWorld world_default() {
    DcWorld w;
    w.trees = {{1, 6}, {3, 2}, {5, 7}, {7, 1}, {8, 6}};
    w.drones = {Cell{1, 1}, Cell{2, 8}, Cell{7, 4}, Cell{8, 8}};
    w.ego = 0;
    return w;
}

DcModel::DcModel(std::set<Cell> trees, WindMode mode)
    : trees_(std::move(trees)), mode_(mode) {
    Domain view_values{std::int64_t(Free), std::int64_t(Tree),
                       std::int64_t(Drone), std::int64_t(OutOfBounds)};
    Domain coords;
    for (int i = 0; i < kSize; ++i) coords.push_back(std::int64_t(i));
    std::vector<FeatureSchema::Feature> features;
    for (int dx = -kViewRadius; dx <= kViewRadius; ++dx)
        for (int dy = -kViewRadius; dy <= kViewRadius; ++dy)
            features.push_back({"v" + std::to_string(dx + kViewRadius) + "_" +
                                    std::to_string(dy + kViewRadius),
                                view_values});
    features.push_back({"x", coords});
    features.push_back({"y", coords});
    schema_ = std::make_shared<FeatureSchema>(std::move(features));
}

bool DcModel::crashed(const State& s) const {
    return s.as_int(view_index(0, 0)) == OutOfBounds;
}

Cell DcModel::position(const State& s) const {
    return {int(s.as_int(kViewCells)), int(s.as_int(kViewCells + 1))};
}

std::vector<Cell> DcModel::visible_drones(const State& s) const {
    Cell pos = position(s);
    std::vector<Cell> out;
    for (int dx = -kViewRadius; dx <= kViewRadius; ++dx)
        for (int dy = -kViewRadius; dy <= kViewRadius; ++dy) {
            if (dx == 0 && dy == 0) continue;
            if (s.as_int(view_index(dx, dy)) == Drone)
                out.push_back({pos.x + dx, pos.y + dy});
        }
    return out;
}

State DcModel::make_state(Cell pos, const std::vector<Cell>& others) const {
    std::vector<Value> values(kViewCells + 2);
    for (int dx = -kViewRadius; dx <= kViewRadius; ++dx)
        for (int dy = -kViewRadius; dy <= kViewRadius; ++dy) {
            Cell c{pos.x + dx, pos.y + dy};
            std::int64_t v;
            if (dx == 0 && dy == 0)
                v = Drone;
            else if (!in_bounds(c))
                v = OutOfBounds;
            else if (trees_.contains(c))
                v = Tree;
            else if (std::find(others.begin(), others.end(), c) != others.end())
                v = Drone;
            else
                v = Free;
            values[view_index(dx, dy)] = v;
        }
    values[kViewCells] = std::int64_t(pos.x);
    values[kViewCells + 1] = std::int64_t(pos.y);
    return State(schema_, std::move(values));
}

State DcModel::make_crashed(Cell pos) const {
    State s = make_state(pos, {});
    return s.with_value(view_index(0, 0), std::int64_t(OutOfBounds));
}

State DcModel::initial_state(const DcWorld& world) const {
    world.check();
    std::vector<Cell> others;
    for (int i = 0; i < kDrones; ++i)
        if (i != world.ego) others.push_back(world.drones[i]);
    return make_state(world.drones[world.ego], others);
}

int DcModel::cover_quality(Cell pos, const std::vector<Cell>& others) const {
    int quality = 0;
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
            Cell c{pos.x + dx, pos.y + dy};
            if (!in_bounds(c) || trees_.contains(c)) continue;
            bool overlapped = false;
            for (Cell o : others)
                overlapped = overlapped || (std::abs(o.x - c.x) <= 1 &&
                                            std::abs(o.y - c.y) <= 1);
            if (!overlapped) ++quality;
        }
    return quality;
}

std::vector<ActionId> DcModel::actions(const State& s) const {
    if (crashed(s)) return {Stop};
    return {Up, Down, Left, Right, Stop};
}

WeightedStates DcModel::support(const State& s, ActionId a) const {
    WeightedStates out(true);
    if (crashed(s)) {
        if (a != Stop) throw CrashedAgent("dc: crashed state is absorbing");
        out.add(s, Rational(1));
        return out;
    }
    if (a < Up || a > Stop) throw IllegalAction("dc: unknown action");

    Cell pos = position(s);
    std::vector<Cell> others = visible_drones(s);

    // Other drones move once by their own greedy policies, computed on the
    // world as reconstructable from this state.
    std::vector<Cell> intended;
    for (std::size_t i = 0; i < others.size(); ++i) {
        std::vector<Cell> rest{pos};
        for (std::size_t j = 0; j < others.size(); ++j)
            if (j != i) rest.push_back(others[j]);
        State view = make_state(others[i], rest);
        intended.push_back(
            step(others[i], static_cast<Action>(greedy_action(*this, view))));
    }

    auto ego_winds = wind_outcomes(static_cast<Action>(a));
    Cell ego_moved = step(pos, static_cast<Action>(a));

    // Per-combination final placement; JointWind also enumerates wind for
    // each other drone (their greedy move plays the role of the action).
    struct Placement {
        std::vector<Cell> finals;
        Rational prob;
    };
    std::vector<Placement> placements{{{}, Rational(1)}};
    if (mode_ == WindMode::JointWind) {
        for (std::size_t i = 0; i < others.size(); ++i) {
            std::vector<Placement> expanded;
            // Other drones' chosen direction for the opposite-wind rule.
            Action move_dir = Stop;
            for (Action d : {Up, Down, Left, Right})
                if (step(others[i], d) == intended[i] && intended[i] != others[i])
                    move_dir = d;
            for (const Placement& pl : placements)
                for (const WindOutcome& w : wind_outcomes(move_dir)) {
                    Placement p2 = pl;
                    p2.finals.push_back(step(intended[i], w.dir));
                    p2.prob *= w.prob;
                    expanded.push_back(p2);
                }
            placements = std::move(expanded);
        }
    } else {
        for (std::size_t i = 0; i < others.size(); ++i)
            placements[0].finals.push_back(intended[i]);
    }

    for (const WindOutcome& w : ego_winds) {
        Cell ego_final = step(ego_moved, w.dir);
        for (const Placement& pl : placements) {
            Rational prob = w.prob * pl.prob;
            // Collisions: tree cell, shared cell, or position swap.
            bool ego_crash = trees_.contains(ego_final);
            std::vector<Cell> survivors;
            for (std::size_t i = 0; i < pl.finals.size(); ++i) {
                Cell f = pl.finals[i];
                bool crash = trees_.contains(f) || f == ego_final ||
                             (f == pos && ego_final == others[i]);
                if (f == ego_final || (f == pos && ego_final == others[i]))
                    ego_crash = true;
                for (std::size_t j = 0; j < pl.finals.size(); ++j) {
                    if (i == j) continue;
                    crash = crash || pl.finals[j] == f ||
                            (pl.finals[j] == others[i] && f == others[j]);
                }
                if (!crash) survivors.push_back(f);
            }
            if (ego_crash)
                out.add(make_crashed(ego_final), prob);
            else
                out.add(make_state(ego_final, survivors), prob);
        }
    }
    return out;
}

Rational DcModel::reward(const State& s, ActionId a) const {
    Rational r;
    WeightedStates branch = support(s, a);
    for (const auto& [s2, pr] : branch.entries()) {
        if (crashed(s2)) {
            r += pr * Rational(-10);
        } else {
            r += pr * Rational(cover_quality(position(s2), visible_drones(s2)));
        }
    }
    return r;
}

bool DcModel::valid_state(const State& s) const {
    Cell pos = position(s);
    if (!in_bounds(pos) || trees_.contains(pos)) return false;
    std::int64_t center = s.as_int(view_index(0, 0));
    if (center != Drone && center != OutOfBounds) return false;
    for (int dx = -kViewRadius; dx <= kViewRadius; ++dx)
        for (int dy = -kViewRadius; dy <= kViewRadius; ++dy) {
            if (dx == 0 && dy == 0) continue;
            Cell c{pos.x + dx, pos.y + dy};
            std::int64_t v = s.as_int(view_index(dx, dy));
            if (!in_bounds(c)) {
                if (v != OutOfBounds) return false;
            } else if (trees_.contains(c)) {
                if (v != Tree) return false;
            } else if (v != Free && v != Drone) {
                return false;
            }
        }
    return true;
}

std::string DcModel::action_name(ActionId a) const {
    switch (a) {
    case Up: return "up";
    case Down: return "down";
    case Left: return "left";
    case Right: return "right";
    case Stop: return "stop";
    }
    return TransitionModel::action_name(a);
}

ActionId greedy_action(const DcModel& model, const State& s) {
    if (model.crashed(s)) return Stop;
    Cell pos = model.position(s);
    std::vector<Cell> others = model.visible_drones(s);
    double best_value = -1e18;
    ActionId best = Stop;
    for (Action a : {Up, Down, Left, Right, Stop}) {
        Cell moved = step(pos, a);
        double value = 0;
        for (const WindOutcome& w : wind_outcomes(a)) {
            Cell final = step(moved, w.dir);
            double outcome;
            bool crash = model.trees().contains(final) ||
                         std::find(others.begin(), others.end(), final) !=
                             others.end();
            if (crash)
                outcome = -100.0;
            else
                outcome = model.cover_quality(final, others);
            value += w.prob.to_double() * outcome;
        }
        if (value > best_value + 1e-12) {
            best_value = value;
            best = a;
        }
    }
    return best;
}

std::shared_ptr<Policy> greedy_policy(const DcModel& model) {
    return std::make_shared<FunctionPolicy>(
        "heuristic", [&model](const State& s) { return greedy_action(model, s); });
}

Predicate make_predicate(const DcModel& model, const std::string& name,
                         bool global, int quadrant) {
    std::string scope = global ? "global_" : "local_";
    std::string params = "{\"quadrant\":" + std::to_string(quadrant) + "}";

    auto per_drone = [&model, name, quadrant](const State& s, Cell pos,
                                              const std::vector<Cell>& others,
                                              bool is_ego) {
        // Visible non-ego drones are alive by construction.
        if (name == "crash") return is_ego && model.crashed(s);
        if (name == "no_drones") {
            for (Cell o : others)
                if (std::abs(o.x - pos.x) <= kViewRadius &&
                    std::abs(o.y - pos.y) <= kViewRadius)
                    return false;
            return true;
        }
        if (name == "perfect_cover" || name == "max_reward") {
            if (is_ego && model.crashed(s)) return false;
            // Perfect: no tree in the in-bounds cover and no overlap.
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy) {
                    Cell c{pos.x + dx, pos.y + dy};
                    if (in_bounds(c) && model.trees().contains(c)) return false;
                    for (Cell o : others)
                        if (std::abs(o.x - c.x) <= 1 && std::abs(o.y - c.y) <= 1)
                            return false;
                }
            if (name == "max_reward")
                return model.cover_quality(pos, others) == 9;
            return true;
        }
        if (name == "region") return quadrant_of(pos) == quadrant;
        throw UnknownPredicate("dc: unknown predicate " + name);
    };

    auto fn = [&model, per_drone, name, global](const State& s) {
        Cell pos = model.position(s);
        std::vector<Cell> others = model.visible_drones(s);
        if (!global) return per_drone(s, pos, others, true);
        if (name == "region") {
            // Global region: every reconstructable drone in its own
            // distinct quadrant. Out-of-view drones cannot be checked.
            std::set<int> used{quadrant_of(pos)};
            for (Cell o : others)
                if (!used.insert(quadrant_of(o)).second) return false;
            return true;
        }
        if (!per_drone(s, pos, others, true)) return false;
        for (std::size_t i = 0; i < others.size(); ++i) {
            std::vector<Cell> rest{pos};
            for (std::size_t j = 0; j < others.size(); ++j)
                if (j != i) rest.push_back(others[j]);
            if (!per_drone(s, others[i], rest, false)) return false;
        }
        return true;
    };

    return Predicate::native({"drone_coverage", scope + name, fn, params});
}

} // namespace hxplain::dc

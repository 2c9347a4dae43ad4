#pragma once

#include "hxplain/history.hpp"
#include "hxplain/model.hpp"
#include "hxplain/predicate.hpp"
#include "hxplain/rng.hpp"

#include <array>
#include <map>
#include <set>

namespace hxplain::fl {

// Cells are (row, col).
struct FlMap {
    int width = 0;  // columns
    int height = 0; // rows
    Cell start;
    Cell goal;
    std::set<Cell> holes;

    void check() const;
    bool in_bounds(Cell c) const {
        return 0 <= c.x && c.x < height && 0 <= c.y && c.y < width;
    }
};

/// The small 4x4 test map and a representative 10-hole 8x8 map. Neither is
/// the map the reference figures were produced from.
FlMap map_4x4();
FlMap map_8x8();

enum Action : ActionId { Up = 0, Down = 1, Left = 2, Right = 3, Stay = 4 };

/// Slippery grid dynamics over the 5-feature state
/// (P, PP, HP, PD, HN). Intended direction with probability 3/5, each
/// lateral with 1/5; off-grid moves keep the agent in place; goal and hole
/// cells are absorbing via a single Stay action.
class FlModel final : public TransitionModel {
public:
    explicit FlModel(FlMap map);

    std::string env_id() const override { return "frozen_lake"; }
    SchemaPtr schema() const override { return schema_; }
    std::vector<ActionId> actions(const State& s) const override;
    WeightedStates support(const State& s, ActionId a) const override;
    int branching_bound() const override { return 3; }
    Rational reward(const State& s, ActionId a) const override;
    bool valid_state(const State& s) const override;
    std::string action_name(ActionId a) const override;

    const FlMap& map() const { return map_; }
    bool terminal(const State& s) const { return terminal_cell(s.as_cell(0)); }
    bool terminal_cell(Cell c) const {
        return c == map_.goal || map_.holes.contains(c);
    }

    /// Lexicographically smallest hole at minimum Manhattan distance.
    Cell closest_hole(Cell from) const;

    /// Full state for position p reached from previous position pp.
    State make_state(Cell p, Cell pp) const;
    State initial_state() const { return make_state(map_.start, map_.start); }

    Cell move(Cell from, Action a) const;

private:
    FlMap map_;
    SchemaPtr schema_;
};

Predicate win_predicate(const FlModel& model);
Predicate holes_predicate(const FlModel& model);
Predicate region_predicate(const FlModel& model, std::set<Cell> cells);

/// name in {win, holes, region}; region takes the target cells.
Predicate make_predicate(const FlModel& model, const std::string& name,
                         const std::set<Cell>& region_cells = {});

/// Greedy policy over a tabular Q-function keyed by position.
class QTablePolicy final : public Policy {
public:
    QTablePolicy(std::map<Cell, std::array<double, 4>> q, std::uint64_t seed)
        : q_(std::move(q)), seed_(seed) {}

    ActionId action(const State& s) const override;
    std::string kind() const override { return "q_table"; }
    std::uint64_t seed() const override { return seed_; }
    const std::map<Cell, std::array<double, 4>>& table() const { return q_; }

private:
    std::map<Cell, std::array<double, 4>> q_;
    std::uint64_t seed_;
};

struct TrainParams {
    std::uint64_t episodes = 200'000;
    double alpha = 0.1;
    double gamma = 0.98;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    std::uint64_t seed = 1;
};

/// Tabular Q-learning; reward 1 at the goal, 0 elsewhere. Deterministic
/// given the seed. Greedy argmax ties go to the lowest action index.
QTablePolicy train_q(const FlModel& model, const TrainParams& params);

} // namespace hxplain::fl

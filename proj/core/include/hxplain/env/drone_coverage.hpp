#pragma once

#include "hxplain/model.hpp"
#include "hxplain/predicate.hpp"

#include <array>
#include <set>

namespace hxplain::dc {

constexpr int kSize = 10;
constexpr int kViewRadius = 2; // 5x5 view
constexpr int kViewCells = 25;
constexpr int kDrones = 4;

enum ViewCell : std::int64_t { Free = 0, Tree = 1, Drone = 2, OutOfBounds = 3 };
enum Action : ActionId { Up = 0, Down = 1, Left = 2, Right = 3, Stop = 4 };

struct DcWorld {
    std::set<Cell> trees;
    std::array<Cell, kDrones> drones;
    int ego = 0;

    void check() const;
};

/// A bundled 10x10 world with a handful of trees and spread-out drones.
DcWorld world_default();

enum class WindMode { EgoWind, JointWind };

/// Windy grid for the ego drone, with the other drones folded into the
/// environment. The ego state is the 5x5 view (row-major) plus the (x, y)
/// position; drones outside the view do not take part in the dynamics. A
/// crashed ego is absorbing and marked by OutOfBounds at the view center.
class DcModel final : public TransitionModel {
public:
    DcModel(std::set<Cell> trees, WindMode mode = WindMode::EgoWind);

    std::string env_id() const override { return "drone_coverage"; }
    SchemaPtr schema() const override { return schema_; }
    std::vector<ActionId> actions(const State& s) const override;
    WeightedStates support(const State& s, ActionId a) const override;
    int branching_bound() const override {
        return mode_ == WindMode::EgoWind ? 4 : 256;
    }
    Rational reward(const State& s, ActionId a) const override;
    bool valid_state(const State& s) const override;
    std::string action_name(ActionId a) const override;

    const std::set<Cell>& trees() const { return trees_; }
    WindMode mode() const { return mode_; }

    bool crashed(const State& s) const;
    Cell position(const State& s) const;
    std::vector<Cell> visible_drones(const State& s) const;

    /// Ego state at pos with the given other drones on the map.
    State make_state(Cell pos, const std::vector<Cell>& others) const;
    State make_crashed(Cell pos) const;
    State initial_state(const DcWorld& world) const;

    /// Cover cells of own 3x3 that are in-bounds, tree-free and not
    /// overlapped by another drone's cover. 9 is a perfect cover.
    int cover_quality(Cell pos, const std::vector<Cell>& others) const;

private:
    std::set<Cell> trees_;
    WindMode mode_;
    SchemaPtr schema_;
};

/// One-step lookahead: expected cover quality minus a dominating crash
/// penalty, under the wind distribution; ties by action order
/// up, down, left, right, stop.
ActionId greedy_action(const DcModel& model, const State& s);
std::shared_ptr<Policy> greedy_policy(const DcModel& model);

/// name in {perfect_cover, max_reward, no_drones, crash, region},
/// local (ego only) or global (every reconstructable drone). The region
/// quadrants are the four 5x5 corners, indexed 0..3 row-major.
Predicate make_predicate(const DcModel& model, const std::string& name,
                         bool global = false, int quadrant = 0);

} // namespace hxplain::dc

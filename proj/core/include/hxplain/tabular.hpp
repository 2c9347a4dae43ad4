#pragma once

#include "hxplain/model.hpp"

#include <map>

namespace hxplain {

/// Explicit finite MDP over a single integer "id" feature. Used by the
/// synthetic fixtures and the random-instance generators.
class TabularModel final : public TransitionModel {
public:
    explicit TabularModel(int num_states, std::string env_id = "tabular");

    std::string env_id() const override { return env_id_; }
    SchemaPtr schema() const override { return schema_; }
    std::vector<ActionId> actions(const State& s) const override;
    WeightedStates support(const State& s, ActionId a) const override;
    int branching_bound() const override;

    /// Adds probability mass; per-(state, action) masses must sum to 1.
    void add_transition(int from, ActionId a, int to, const Rational& pr);
    void check() const;

    State state(int id) const;
    int id_of(const State& s) const { return int(s.as_int(0)); }
    int num_states() const { return num_states_; }

private:
    int num_states_;
    std::string env_id_;
    SchemaPtr schema_;
    // (state, action) -> successor distribution
    std::map<std::pair<int, ActionId>, std::map<int, Rational>> transitions_;
};

/// Policy from an explicit id -> action table.
class TablePolicy final : public Policy {
public:
    explicit TablePolicy(std::vector<ActionId> table)
        : table_(std::move(table)) {}
    ActionId action(const State& s) const override {
        return table_.at(std::size_t(s.as_int(0)));
    }
    std::string kind() const override { return "table"; }

private:
    std::vector<ActionId> table_;
};

} // namespace hxplain

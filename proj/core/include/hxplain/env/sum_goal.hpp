#pragma once

#include "hxplain/model.hpp"
#include "hxplain/predicate.hpp"

namespace hxplain::sg {

/// Deterministic assignment environment: n features, f_1..f_{n-1} over
/// {0,1} and f_n over {0,1,n}; the goal is sum >= n + (n-1)/2. An action
/// (re)assigns one feature to one of its domain values. The bundled
/// threshold policy assigns n to f_n exactly when at least (n-1)/2 of the
/// first n-1 features are 1; with horizon 1 this realizes the
/// exponential-PAXp fixture.
class SumGoalModel final : public TransitionModel {
public:
    explicit SumGoalModel(int n);

    std::string env_id() const override { return "sumgoal"; }
    SchemaPtr schema() const override { return schema_; }
    std::vector<ActionId> actions(const State& s) const override;
    WeightedStates support(const State& s, ActionId a) const override;
    int branching_bound() const override { return 1; }

    int n() const { return n_; }

    /// Action id for "set feature f to domain value index j".
    ActionId assign(int feature, int value_index) const;
    std::pair<int, int> decode(ActionId a) const;

    State zero_state() const;
    State state_of(const std::vector<std::int64_t>& values) const;

private:
    int n_;
    SchemaPtr schema_;
};

Predicate goal_predicate(const SumGoalModel& model);

/// Threshold policy: f_n <- n iff at least (n-1)/2 ones among f_1..f_{n-1},
/// else f_n <- 0.
std::shared_ptr<Policy> threshold_policy(const SumGoalModel& model);

} // namespace hxplain::sg

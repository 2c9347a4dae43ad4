#include "hxplain/env/sum_goal.hpp"

namespace hxplain::sg {

SumGoalModel::SumGoalModel(int n) : n_(n) {
    if (n < 3 || n % 2 == 0) throw Error("sumgoal: n must be odd and >= 3");
    std::vector<FeatureSchema::Feature> features;
    for (int i = 1; i < n; ++i)
        features.push_back({"f" + std::to_string(i),
                            {std::int64_t(0), std::int64_t(1)}});
    features.push_back({"f" + std::to_string(n),
                        {std::int64_t(0), std::int64_t(1), std::int64_t(n)}});
    schema_ = std::make_shared<FeatureSchema>(std::move(features));
}

ActionId SumGoalModel::assign(int feature, int value_index) const {
    return feature * 3 + value_index;
}

std::pair<int, int> SumGoalModel::decode(ActionId a) const {
    return {a / 3, a % 3};
}

std::vector<ActionId> SumGoalModel::actions(const State&) const {
    std::vector<ActionId> out;
    for (int f = 0; f < n_; ++f) {
        std::size_t domain = schema_->feature(f).domain.size();
        for (int j = 0; j < int(domain); ++j) out.push_back(assign(f, j));
    }
    return out;
}

WeightedStates SumGoalModel::support(const State& s, ActionId a) const {
    auto [feature, value_index] = decode(a);
    if (feature < 0 || feature >= n_ ||
        value_index >= int(schema_->feature(feature).domain.size()))
        throw IllegalAction("sumgoal: bad assignment action");
    WeightedStates out(true);
    out.add(s.with_value(feature, schema_->feature(feature).domain[value_index]),
            Rational(1));
    return out;
}

State SumGoalModel::zero_state() const {
    std::vector<Value> values(n_, std::int64_t(0));
    return State(schema_, std::move(values));
}

State SumGoalModel::state_of(const std::vector<std::int64_t>& values) const {
    std::vector<Value> v(values.begin(), values.end());
    return State(schema_, std::move(v));
}

Predicate goal_predicate(const SumGoalModel& model) {
    int n = model.n();
    std::int64_t target = n + (n - 1) / 2;
    return Predicate::native({"sumgoal", "goal", [n, target](const State& s) {
                                  std::int64_t sum = 0;
                                  for (int i = 0; i < n; ++i) sum += s.as_int(i);
                                  return sum >= target;
                              }});
}

std::shared_ptr<Policy> threshold_policy(const SumGoalModel& model) {
    int n = model.n();
    const SumGoalModel* m = &model;
    return std::make_shared<FunctionPolicy>(
        "heuristic", [n, m](const State& s) {
            std::int64_t ones = 0;
            for (int i = 0; i + 1 < n; ++i) ones += s.as_int(i) == 1;
            // Value index 2 is n, index 0 is 0, in f_n's domain.
            return m->assign(n - 1, ones >= (n - 1) / 2 ? 2 : 0);
        });
}

} // namespace hxplain::sg

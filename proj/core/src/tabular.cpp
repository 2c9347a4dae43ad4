#include "hxplain/tabular.hpp"

namespace hxplain {

TabularModel::TabularModel(int num_states, std::string env_id)
    : num_states_(num_states), env_id_(std::move(env_id)) {
    if (num_states < 1) throw Error("tabular: needs at least one state");
    Domain ids;
    for (int i = 0; i < num_states; ++i) ids.push_back(std::int64_t(i));
    schema_ = std::make_shared<FeatureSchema>(
        std::vector<FeatureSchema::Feature>{{"id", ids}});
}

void TabularModel::add_transition(int from, ActionId a, int to,
                                  const Rational& pr) {
    if (from < 0 || from >= num_states_ || to < 0 || to >= num_states_)
        throw Error("tabular: state id out of range");
    if (pr.is_zero()) return;
    transitions_[{from, a}][to] += pr;
}

void TabularModel::check() const {
    for (int i = 0; i < num_states_; ++i) {
        bool any = false;
        for (const auto& [key, dist] : transitions_) {
            if (key.first != i) continue;
            any = true;
            Rational mass;
            for (const auto& [to, pr] : dist) mass += pr;
            if (!(mass == Rational(1)))
                throw Error("tabular: support mass != 1 at state " +
                            std::to_string(i));
        }
        if (!any) throw Error("tabular: state " + std::to_string(i) +
                              " has no actions");
    }
}

std::vector<ActionId> TabularModel::actions(const State& s) const {
    int id = id_of(s);
    std::vector<ActionId> out;
    for (const auto& [key, dist] : transitions_)
        if (key.first == id) out.push_back(key.second);
    if (out.empty()) throw Error("tabular: no actions for state");
    return out;
}

WeightedStates TabularModel::support(const State& s, ActionId a) const {
    auto it = transitions_.find({id_of(s), a});
    if (it == transitions_.end())
        throw IllegalAction("tabular: no such (state, action)");
    WeightedStates out(true);
    for (const auto& [to, pr] : it->second) out.add(state(to), pr);
    return out;
}

int TabularModel::branching_bound() const {
    std::size_t b = 1;
    for (const auto& [key, dist] : transitions_) b = std::max(b, dist.size());
    return int(b);
}

State TabularModel::state(int id) const {
    return State(schema_, {std::int64_t(id)});
}

} // namespace hxplain

#include "hxplain/model.hpp"

namespace hxplain {

WeightedStates next(const TransitionModel& model, const Policy& policy,
                    const WeightedStates& frontier) {
    WeightedStates out(frontier.complete());
    for (const auto& [s, pr] : frontier.entries()) {
        ActionId a = policy.action(s);
        auto avail = model.actions(s);
        bool legal = false;
        for (ActionId b : avail) legal = legal || b == a;
        if (!legal)
            throw PolicyUndefined("next: policy action " + std::to_string(a) +
                                  " not available");
        WeightedStates branch = model.support(s, a);
        for (const auto& [s2, p2] : branch.entries()) out.add(s2, pr * p2);
    }
    return out;
}

WeightedStates succ(const TransitionModel& model, const Policy& policy,
                    const WeightedStates& frontier, int k) {
    if (k < 0) throw Error("succ: negative horizon");
    WeightedStates cur = frontier;
    for (int i = 0; i < k; ++i) cur = next(model, policy, cur);
    return cur;
}

} // namespace hxplain

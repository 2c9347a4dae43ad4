#include "hxplain/fhxp.hpp"

#include <algorithm>
#include <numeric>

namespace hxplain {

ForwardExplanation explain_forward(const TransitionModel& model,
                                   const Policy& policy, const History& h,
                                   const Predicate& d,
                                   const ScoringBudget& budget,
                                   std::optional<int> fixed_horizon) {
    h.check();
    ForwardExplanation out;
    out.budget = budget;
    const int k = h.length();
    for (int i = 0; i < k; ++i) {
        int horizon = fixed_horizon ? *fixed_horizon : k - i - 1;
        ImportanceResult r = importance(model, policy, h.states[i],
                                        h.actions[i], d, horizon, budget);
        out.scores.push_back(r.score);
        out.single_action.push_back(r.single_action);
    }
    out.ranking.resize(k);
    std::iota(out.ranking.begin(), out.ranking.end(), 0);
    std::stable_sort(out.ranking.begin(), out.ranking.end(),
                     [&](int a, int b) { return out.scores[a] > out.scores[b]; });
    return out;
}

} // namespace hxplain

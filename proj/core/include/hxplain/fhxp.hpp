#pragma once

#include "hxplain/history.hpp"
#include "hxplain/scoring.hpp"

namespace hxplain {

struct ForwardExplanation {
    std::vector<Score> scores;          // one per action index
    std::vector<bool> single_action;
    std::vector<int> ranking;           // indices by descending score, ties
                                        // by smaller index
    ScoringBudget budget;
};

/// Per-action importance over the whole history. By default action i is
/// scored at the remaining horizon k-i-1 (reaching d at the history's
/// end); `fixed_horizon` overrides it with a constant, for parity with
/// backward windows.
ForwardExplanation explain_forward(const TransitionModel& model,
                                   const Policy& policy, const History& h,
                                   const Predicate& d,
                                   const ScoringBudget& budget = {},
                                   std::optional<int> fixed_horizon = {});

} // namespace hxplain

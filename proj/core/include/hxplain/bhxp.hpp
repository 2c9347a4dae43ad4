#pragma once

#include "hxplain/history.hpp"
#include "hxplain/paxp.hpp"

namespace hxplain {

struct BhxpConfig {
    int window = 4;          // maximal sub-sequence length l
    PaxpConfig paxp;
    ScoringBudget budget;    // Exhaustive by default
    bool full_enumeration = false;
};

enum class Termination { ReachedStart, ZeroUtility };

struct BhxpStep {
    int window_lo = 0;       // [i_min, i_max] of the processed window
    int window_hi = 0;
    int index = 0;           // selected action index
    ActionId action = 0;
    Score score;
    bool single_action = false;
    Rational anchor_utility; // u^l of the anchor wrt the predicate studied
    Predicate predicate_studied;
    Predicate predicate_next;
};

struct Explanation {
    std::vector<BhxpStep> steps; // newest-first, indices strictly decreasing
    Termination termination = Termination::ReachedStart;
    bool final_state_satisfied = true;
};

struct WindowPick {
    int index;
    ActionId action;
    Score score;
    bool single_action;
};

/// Most important action over indices [i_min, i_max-1], horizon l.
/// Ties go to the smallest index.
WindowPick window_argmax(const TransitionModel& model, const Policy& policy,
                         const History& h, int i_min, int i_max,
                         const Predicate& d, int l,
                         const ScoringBudget& budget);

/// The backward loop: process at least one window, then stop once the
/// window reached the start of the history or the anchor's utility is 0.
Explanation explain_backward(const TransitionModel& model, const Policy& policy,
                             const History& h, Predicate d,
                             const BhxpConfig& cfg);

} // namespace hxplain

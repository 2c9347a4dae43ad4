#include "hxplain/bhxp.hpp"

namespace hxplain {

WindowPick window_argmax(const TransitionModel& model, const Policy& policy,
                         const History& h, int i_min, int i_max,
                         const Predicate& d, int l,
                         const ScoringBudget& budget) {
    if (!(0 <= i_min && i_min < i_max && i_max <= h.length()))
        throw Error("window_argmax: bad window bounds");
    WindowPick best{-1, 0, Rational(0), false};
    for (int i = i_min; i < i_max; ++i) {
        ImportanceResult r = importance(model, policy, h.states[i],
                                        h.actions[i], d, l, budget);
        if (best.index < 0 || r.score > best.score) {
            best = {i, h.actions[i], r.score, r.single_action};
        }
    }
    return best;
}

Explanation explain_backward(const TransitionModel& model, const Policy& policy,
                             const History& h, Predicate d,
                             const BhxpConfig& cfg) {
    h.check();
    const int l = cfg.window;
    if (l < 1) throw Error("explain_backward: window must be >= 1");

    Explanation out;
    out.final_state_satisfied = d.eval(h.states.back());

    int i_max = h.length();
    while (true) {
        int i_min = std::max(0, i_max - l);
        WindowPick pick =
            window_argmax(model, policy, h, i_min, i_max, d, l, cfg.budget);
        const State& anchor = h.states[pick.index];
        Rational u = state_utility(model, policy, anchor, d, l);
        BhxpClassifier kappa(model, policy, anchor, d, l);
        Predicate next = paxpred(kappa, anchor, cfg.paxp, cfg.full_enumeration);

        BhxpStep step;
        step.window_lo = i_min;
        step.window_hi = i_max;
        step.index = pick.index;
        step.action = pick.action;
        step.score = pick.score;
        step.single_action = pick.single_action;
        step.anchor_utility = u;
        step.predicate_studied = d;
        step.predicate_next = next;
        out.steps.push_back(std::move(step));

        if (u.is_zero()) {
            out.termination = Termination::ZeroUtility;
            break;
        }
        if (i_min == 0) {
            out.termination = Termination::ReachedStart;
            break;
        }
        d = next;
        i_max = pick.index;
    }
    return out;
}

} // namespace hxplain

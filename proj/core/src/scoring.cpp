#include "hxplain/scoring.hpp"

#include <cstdlib>
#include <future>
#include <vector>

namespace hxplain {

Rational utility(const WeightedStates& frontier, const Predicate& d) {
    Rational u;
    for (const auto& [s, pr] : frontier.entries())
        if (d.eval(s)) u += pr;
    return u;
}

Rational state_utility(const TransitionModel& model, const Policy& policy,
                       const State& s, const Predicate& d, int k) {
    return utility(succ(model, policy, WeightedStates::single(s), k), d);
}

namespace {

// Counts length-(k+1) scenarios under the branch, stopping at the cap.
std::uint64_t count_scenarios(const TransitionModel& model, const Policy& policy,
                              const State& s, int depth, std::uint64_t cap) {
    if (depth == 0) return 1;
    std::uint64_t total = 0;
    ActionId a = policy.action(s);
    WeightedStates branch = model.support(s, a);
    for (const auto& [s2, pr] : branch.entries()) {
        total += count_scenarios(model, policy, s2, depth - 1, cap - total);
        if (total >= cap) return cap;
    }
    return total;
}

} // namespace

Rational branch_utility(const TransitionModel& model, const Policy& policy,
                        const State& s, ActionId a, const Predicate& d, int k,
                        const ScoringBudget& budget, std::uint64_t substream) {
    WeightedStates root = model.support(s, a);
    if (budget.mode == ScoringBudget::Mode::Exhaustive)
        return utility(succ(model, policy, root, k), d);

    // Sampled mode degenerates to the exact value when every scenario fits
    // in the budget, so estimates converge to exhaustive at the cap.
    std::uint64_t n = budget.max_scenarios;
    std::uint64_t total = 0;
    for (const auto& [s2, pr] : root.entries()) {
        total += count_scenarios(model, policy, s2, k, n + 1 - total);
        if (total > n) break;
    }
    if (total <= n) return utility(succ(model, policy, root, k), d);

    Rng rng = Rng::substream(budget.seed, "scenario", substream);
    std::uint64_t hits = 0;
    std::vector<State> states;
    std::vector<Rational> weights;
    for (std::uint64_t i = 0; i < n; ++i) {
        states.clear();
        weights.clear();
        for (const auto& [s2, pr] : root.entries()) {
            states.push_back(s2);
            weights.push_back(pr);
        }
        State cur = states[rng.next_weighted(weights)];
        for (int step = 0; step < k; ++step) {
            states.clear();
            weights.clear();
            WeightedStates next_branch = model.support(cur, policy.action(cur));
            for (const auto& [s2, pr] : next_branch.entries()) {
                states.push_back(s2);
                weights.push_back(pr);
            }
            cur = states[rng.next_weighted(weights)];
        }
        if (d.eval(cur)) ++hits;
    }
    return Rational(BigInt(hits), BigInt(n));
}

int worker_count() {
    const char* env = std::getenv("HXPLAIN_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

ImportanceResult importance(const TransitionModel& model, const Policy& policy,
                            const State& s, ActionId a, const Predicate& d,
                            int k, const ScoringBudget& budget) {
    auto available = model.actions(s);
    bool legal = false;
    for (ActionId b : available) legal = legal || b == a;
    if (!legal) throw IllegalAction("importance: action not available");

    std::vector<ActionId> alternatives;
    for (ActionId b : available)
        if (b != a) alternatives.push_back(b);

    auto eval_branch = [&](ActionId b) {
        // Substream keyed by the action id, not by evaluation slot.
        return branch_utility(model, policy, s, b, d, k, budget,
                              static_cast<std::uint64_t>(b));
    };

    Rational chosen;
    std::vector<Rational> alt(alternatives.size());
    int workers = worker_count();
    if (workers <= 1 || alternatives.empty()) {
        chosen = eval_branch(a);
        for (std::size_t i = 0; i < alternatives.size(); ++i)
            alt[i] = eval_branch(alternatives[i]);
    } else {
        std::vector<std::future<Rational>> futures;
        futures.push_back(
            std::async(std::launch::async, [&] { return eval_branch(a); }));
        for (ActionId b : alternatives)
            futures.push_back(std::async(std::launch::async,
                                         [&, b] { return eval_branch(b); }));
        chosen = futures[0].get();
        for (std::size_t i = 0; i < alternatives.size(); ++i)
            alt[i] = futures[i + 1].get();
    }

    ImportanceResult result;
    if (alternatives.empty()) {
        // Empty average taken as 0: score is the chosen action's utility.
        result.single_action = true;
        result.score = chosen;
    } else {
        Rational sum;
        for (const Rational& u : alt) sum += u;
        result.score =
            chosen - sum / Rational(static_cast<long long>(alt.size()));
    }
    if (result.score < Rational(-1) || result.score > Rational(1))
        throw Error("importance: score outside [-1, 1]");
    return result;
}

} // namespace hxplain

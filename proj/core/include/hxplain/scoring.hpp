#pragma once

#include "hxplain/model.hpp"
#include "hxplain/predicate.hpp"
#include "hxplain/rng.hpp"

#include <cstdint>
#include <optional>

namespace hxplain {

using Score = Rational;

/// Exhaustive enumeration, or a seeded cap on the number of length-k
/// scenarios sampled per action branch.
struct ScoringBudget {
    enum class Mode { Exhaustive, MaxScenarios };
    Mode mode = Mode::Exhaustive;
    std::uint64_t max_scenarios = 0;
    std::uint64_t seed = 0;

    static ScoringBudget exhaustive() { return {}; }
    static ScoringBudget max(std::uint64_t n, std::uint64_t seed) {
        return {Mode::MaxScenarios, n, seed};
    }
};

struct ImportanceResult {
    Score score;
    bool single_action = false; // no alternatives; empty average taken as 0
};

/// Probability mass of the d-satisfying entries.
Rational utility(const WeightedStates& frontier, const Predicate& d);

/// u_d(succ^k({(s,1)})).
Rational state_utility(const TransitionModel& model, const Policy& policy,
                       const State& s, const Predicate& d, int k);

/// Utility of succ^k(S_(s,a)) under the given budget. In sampled mode the
/// estimate is the d-satisfying fraction over at most `max_scenarios`
/// root-to-leaf scenarios; falls back to the exact value when the branch
/// has no more scenarios than the cap. `substream` keys the PRNG so
/// parallel evaluation of different branches cannot change results.
Rational branch_utility(const TransitionModel& model, const Policy& policy,
                        const State& s, ActionId a, const Predicate& d, int k,
                        const ScoringBudget& budget, std::uint64_t substream);

/// Chosen action's branch utility minus the average over all alternatives.
ImportanceResult importance(const TransitionModel& model, const Policy& policy,
                            const State& s, ActionId a, const Predicate& d,
                            int k, const ScoringBudget& budget = {});

/// Worker cap for the parallel per-alternative evaluation, from
/// HXPLAIN_THREADS (default 1).
int worker_count();

} // namespace hxplain

#pragma once

#include "hxplain/scoring.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace hxplain {

/// Binary classifier labeling x true iff x is at least as useful as the
/// anchor state for reaching d at horizon k. Utilities are memoized per
/// classifier; exact rational comparison throughout.
class BhxpClassifier {
public:
    BhxpClassifier(const TransitionModel& model, const Policy& policy,
                   State anchor, Predicate d, int horizon)
        : model_(model), policy_(policy), anchor_(std::move(anchor)),
          d_(std::move(d)), horizon_(horizon) {
        threshold_ = utility_of(anchor_);
    }

    bool classify(const State& x) const { return utility_of(x) >= threshold_; }

    const State& anchor() const { return anchor_; }
    const Predicate& predicate() const { return d_; }
    int horizon() const { return horizon_; }
    const Rational& threshold() const { return threshold_; }
    const TransitionModel& model() const { return model_; }

    Rational utility_of(const State& x) const {
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        Rational u = state_utility(model_, policy_, x, d_, horizon_);
        cache_.emplace(x, u);
        return u;
    }

private:
    const TransitionModel& model_;
    const Policy& policy_;
    State anchor_;
    Predicate d_;
    int horizon_;
    Rational threshold_;
    mutable std::map<State, Rational> cache_;
};

using FeatureSubset = std::set<std::size_t>;

struct PaxpConfig {
    enum class Proportion { Exhaustive, Sampled };
    enum class Space { FeatureSpace, ValidStates };

    Rational delta = Rational(1);
    Proportion proportion_mode = Proportion::Exhaustive;
    std::uint64_t sample = 10;   // Sampled mode: points per proportion
    std::uint64_t seed = 0;
    Space sample_space = Space::FeatureSpace;
    std::optional<std::vector<std::size_t>> feature_order; // default: schema order
    std::uint64_t enumeration_cap = 2'000'000;

    std::vector<std::size_t> order_for(std::size_t arity) const;
};

/// Prop(kappa(x)=true | x_X = v_X). Exact fraction in Exhaustive mode;
/// fraction over `sample` seeded draws in Sampled mode. `stream_index`
/// selects the deterministic PRNG substream (findLmPAXp keys it by the
/// feature under test).
Rational proportion(const BhxpClassifier& kappa, const State& v,
                    const FeatureSubset& fixed, const PaxpConfig& cfg,
                    std::uint64_t stream_index = 0);

bool is_weak_paxp(const BhxpClassifier& kappa, const State& v,
                  const FeatureSubset& fixed, const PaxpConfig& cfg,
                  std::uint64_t stream_index = 0);

/// Greedy drop pass: start from all features, visit them in cfg order and
/// drop each feature whose removal keeps the set a weak PAXp.
FeatureSubset find_lm_paxp(const BhxpClassifier& kappa, const State& v,
                           const PaxpConfig& cfg);

/// All subset-minimal weak PAXp's. Exhaustive mode only, guarded by the
/// enumeration cap.
std::vector<FeatureSubset> enumerate_paxp(const BhxpClassifier& kappa,
                                          const State& v,
                                          const PaxpConfig& cfg);

/// The redefined predicate: one locally-minimal PAXp as a single-term DNF
/// by default, or the full disjunction over all PAXp's when
/// `full_enumeration` is set.
Predicate paxpred(const BhxpClassifier& kappa, const State& v,
                  const PaxpConfig& cfg, bool full_enumeration = false);

} // namespace hxplain

#include "hxplain/paxp.hpp"

#include <algorithm>

namespace hxplain {

std::vector<std::size_t> PaxpConfig::order_for(std::size_t arity) const {
    if (feature_order) {
        if (feature_order->size() != arity)
            throw Error("PaxpConfig: feature order is not a permutation");
        return *feature_order;
    }
    std::vector<std::size_t> order(arity);
    for (std::size_t i = 0; i < arity; ++i) order[i] = i;
    return order;
}

namespace {

// Enumerates every completion of v over the free features, invoking
// visit(state). Counts against the cap before classification.
void enumerate_matches(const State& v, const FeatureSubset& fixed,
                       std::uint64_t cap,
                       const std::function<void(const State&)>& visit) {
    const FeatureSchema& schema = *v.schema();
    std::vector<std::size_t> free;
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < schema.arity(); ++i) {
        if (fixed.contains(i)) continue;
        free.push_back(i);
        space *= schema.feature(i).domain.size();
        if (space > cap)
            throw SpaceTooLarge("proportion: match set exceeds cap");
    }
    std::vector<Value> values = v.values();
    std::vector<std::size_t> idx(free.size(), 0);
    while (true) {
        for (std::size_t j = 0; j < free.size(); ++j)
            values[free[j]] = schema.feature(free[j]).domain[idx[j]];
        visit(State(v.schema(), values));
        std::size_t j = 0;
        for (; j < free.size(); ++j) {
            if (++idx[j] < schema.feature(free[j]).domain.size()) break;
            idx[j] = 0;
        }
        if (j == free.size()) break;
    }
}

State sample_point(const State& v, const FeatureSubset& fixed, Rng& rng) {
    const FeatureSchema& schema = *v.schema();
    std::vector<Value> values = v.values();
    for (std::size_t i = 0; i < schema.arity(); ++i) {
        if (fixed.contains(i)) continue;
        const Domain& dom = schema.feature(i).domain;
        values[i] = dom[rng.next_below(dom.size())];
    }
    return State(v.schema(), values);
}

} // namespace

Rational proportion(const BhxpClassifier& kappa, const State& v,
                    const FeatureSubset& fixed, const PaxpConfig& cfg,
                    std::uint64_t stream_index) {
    const bool valid_only = cfg.sample_space == PaxpConfig::Space::ValidStates;
    if (cfg.proportion_mode == PaxpConfig::Proportion::Exhaustive) {
        std::uint64_t matched = 0, hit = 0;
        enumerate_matches(v, fixed, cfg.enumeration_cap, [&](const State& x) {
            if (valid_only && !kappa.model().valid_state(x)) return;
            ++matched;
            if (kappa.classify(x)) ++hit;
        });
        if (matched == 0)
            throw EmptyMatchSet("proportion: no valid point matches");
        return Rational(BigInt(hit), BigInt(matched));
    }

    Rng rng = Rng::substream(cfg.seed, "paxp", stream_index);
    std::uint64_t hit = 0;
    std::uint64_t drawn = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t attempt_cap = valid_only ? cfg.sample * 100 : cfg.sample;
    while (drawn < cfg.sample) {
        if (attempts++ >= attempt_cap)
            throw SamplingExhausted(
                "proportion: rejection sampling cap reached");
        State x = sample_point(v, fixed, rng);
        if (valid_only && !kappa.model().valid_state(x)) continue;
        ++drawn;
        if (kappa.classify(x)) ++hit;
    }
    return Rational(BigInt(hit), BigInt(drawn));
}

bool is_weak_paxp(const BhxpClassifier& kappa, const State& v,
                  const FeatureSubset& fixed, const PaxpConfig& cfg,
                  std::uint64_t stream_index) {
    return proportion(kappa, v, fixed, cfg, stream_index) >= cfg.delta;
}

FeatureSubset find_lm_paxp(const BhxpClassifier& kappa, const State& v,
                           const PaxpConfig& cfg) {
    if (!kappa.classify(v))
        throw Error("find_lm_paxp: anchor not classified true");
    FeatureSubset current;
    for (std::size_t i = 0; i < v.schema()->arity(); ++i) current.insert(i);
    for (std::size_t f : cfg.order_for(v.schema()->arity())) {
        FeatureSubset candidate = current;
        candidate.erase(f);
        // Retest substream keyed by the dropped feature so the resulting
        // local minimality is reproducible under the same cfg.
        if (is_weak_paxp(kappa, v, candidate, cfg, f)) current = candidate;
    }
    return current;
}

std::vector<FeatureSubset> enumerate_paxp(const BhxpClassifier& kappa,
                                          const State& v,
                                          const PaxpConfig& cfg) {
    if (cfg.proportion_mode != PaxpConfig::Proportion::Exhaustive)
        throw Error("enumerate_paxp: exhaustive mode only");
    const std::size_t arity = v.schema()->arity();
    if (arity >= 24) throw SpaceTooLarge("enumerate_paxp: too many features");
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        space *= v.schema()->feature(i).domain.size();
        if (space > cfg.enumeration_cap)
            throw SpaceTooLarge("enumerate_paxp: feature space exceeds cap");
    }

    std::vector<FeatureSubset> weak;
    for (std::uint64_t mask = 0; mask < (1ULL << arity); ++mask) {
        FeatureSubset subset;
        for (std::size_t i = 0; i < arity; ++i)
            if (mask & (1ULL << i)) subset.insert(i);
        if (is_weak_paxp(kappa, v, subset, cfg)) weak.push_back(subset);
    }
    std::vector<FeatureSubset> minimal;
    for (const FeatureSubset& x : weak) {
        bool has_proper_subset = false;
        for (const FeatureSubset& y : weak)
            if (y != x && std::includes(x.begin(), x.end(), y.begin(), y.end()))
                has_proper_subset = true;
        if (!has_proper_subset) minimal.push_back(x);
    }
    return minimal;
}

Predicate paxpred(const BhxpClassifier& kappa, const State& v,
                  const PaxpConfig& cfg, bool full_enumeration) {
    std::vector<Term> terms;
    if (full_enumeration) {
        for (const FeatureSubset& x : enumerate_paxp(kappa, v, cfg))
            terms.push_back(Term::from_assignment(x, v));
    } else {
        terms.push_back(Term::from_assignment(find_lm_paxp(kappa, v, cfg), v));
    }
    return Predicate::dnf(std::move(terms));
}

} // namespace hxplain

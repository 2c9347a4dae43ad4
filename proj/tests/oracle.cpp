#include "oracle.hpp"

#include "hxplain/rng.hpp"

namespace hxplain::oracle {

namespace {

// Walks every scenario below (s, remaining) and adds prob to out[leaf].
void walk(const TransitionModel& model, const Policy& policy, const State& s,
          const Rational& prob, int remaining,
          std::map<State, Rational>& out) {
    if (remaining == 0) {
        out[s] += prob;
        return;
    }
    WeightedStates branch = model.support(s, policy.action(s));
    for (const auto& [s2, pr] : branch.entries())
        walk(model, policy, s2, prob * pr, remaining - 1, out);
}

Rational branch_mass(const TransitionModel& model, const Policy& policy,
                     const State& s, ActionId a, const Predicate& d, int k) {
    std::map<State, Rational> leaves;
    WeightedStates branch = model.support(s, a);
    for (const auto& [s2, pr] : branch.entries())
        walk(model, policy, s2, pr, k, leaves);
    Rational u;
    for (const auto& [leaf, pr] : leaves)
        if (d.eval(leaf)) u += pr;
    return u;
}

// Enumerates the cross product of all feature domains.
bool any_counterexample(const BhxpClassifier& kappa, const State& v,
                        const FeatureSubset& fixed, std::size_t feature,
                        State& point, std::optional<State>& found) {
    const FeatureSchema& schema = *v.schema();
    if (feature == schema.arity()) {
        if (!kappa.classify(point)) {
            found = point;
            return true;
        }
        return false;
    }
    if (fixed.contains(feature))
        return any_counterexample(kappa, v, fixed, feature + 1, point, found);
    for (const Value& val : schema.feature(feature).domain) {
        point = point.with_value(feature, val);
        if (any_counterexample(kappa, v, fixed, feature + 1, point, found))
            return true;
    }
    point = point.with_value(feature, v.value(feature));
    return false;
}

} // namespace

std::map<State, Rational> oracle_succ(const TransitionModel& model,
                                      const Policy& policy, const State& s,
                                      int k) {
    std::map<State, Rational> out;
    walk(model, policy, s, Rational(1), k, out);
    return out;
}

Rational oracle_state_utility(const TransitionModel& model,
                              const Policy& policy, const State& s,
                              const Predicate& d, int k) {
    Rational u;
    for (const auto& [leaf, pr] : oracle_succ(model, policy, s, k))
        if (d.eval(leaf)) u += pr;
    return u;
}

Rational oracle_importance(const TransitionModel& model, const Policy& policy,
                           const State& s, ActionId a, const Predicate& d,
                           int k) {
    Rational chosen = branch_mass(model, policy, s, a, d, k);
    Rational sum;
    long long count = 0;
    for (ActionId b : model.actions(s)) {
        if (b == a) continue;
        sum += branch_mass(model, policy, s, b, d, k);
        ++count;
    }
    if (count == 0) return chosen;
    return chosen - sum / Rational(count);
}

std::optional<State> oracle_paxp_counterexample(const BhxpClassifier& kappa,
                                                const State& v,
                                                const FeatureSubset& fixed) {
    std::optional<State> found;
    State point = v;
    any_counterexample(kappa, v, fixed, 0, point, found);
    return found;
}

RandomMdp random_mdp(std::uint64_t seed) {
    Rng rng = Rng::substream(seed, "random-mdp", 0);
    int n = 2 + int(rng.next_below(19)); // |S| in [2, 20]
    int num_actions = 1 + int(rng.next_below(3));

    auto model = std::make_shared<TabularModel>(n);
    for (int s = 0; s < n; ++s) {
        for (ActionId a = 0; a < num_actions; ++a) {
            int branches = 1 + int(rng.next_below(3));
            // Integer weights over the branch targets, normalized exactly.
            std::vector<int> targets, weights;
            int total = 0;
            for (int b = 0; b < branches; ++b) {
                targets.push_back(int(rng.next_below(std::uint64_t(n))));
                weights.push_back(1 + int(rng.next_below(5)));
                total += weights.back();
            }
            std::map<int, Rational> mass;
            for (int b = 0; b < branches; ++b)
                mass[targets[b]] += Rational(weights[b], total);
            for (const auto& [to, pr] : mass)
                model->add_transition(s, a, to, pr);
        }
    }
    model->check();

    std::vector<ActionId> table;
    for (int s = 0; s < n; ++s)
        table.push_back(ActionId(rng.next_below(std::uint64_t(num_actions))));

    // Non-trivial predicate: a random proper subset of state ids.
    std::vector<Term> terms;
    for (int s = 0; s < n; ++s)
        if (rng.next_below(2) == 0)
            terms.push_back(Term({{0, Value(std::int64_t(s))}}));
    if (terms.empty()) terms.push_back(Term({{0, Value(std::int64_t(0))}}));

    RandomMdp out{model, std::make_shared<TablePolicy>(std::move(table)),
                  Predicate::dnf(std::move(terms)),
                  model->state(int(rng.next_below(std::uint64_t(n))))};
    return out;
}

} // namespace hxplain::oracle

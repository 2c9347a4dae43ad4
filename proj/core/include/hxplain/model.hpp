#pragma once

#include "hxplain/errors.hpp"
#include "hxplain/feature.hpp"
#include "hxplain/weighted.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hxplain {

using ActionId = int;

/// Environment dynamics. support(s, a) returns the full successor
/// distribution with mass exactly 1; terminal states expose a single
/// absorbing no-op action so that succ is total.
class TransitionModel {
public:
    virtual ~TransitionModel() = default;

    virtual std::string env_id() const = 0;
    virtual SchemaPtr schema() const = 0;

    /// Available actions from s, in stable order. Never empty.
    virtual std::vector<ActionId> actions(const State& s) const = 0;

    /// Successor distribution of (s, a). Mass 1, no zero entries.
    virtual WeightedStates support(const State& s, ActionId a) const = 0;

    /// Upper bound on |support(s, a)| over all (s, a).
    virtual int branching_bound() const = 0;

    /// Training-only reward; explanation code never reads it.
    virtual Rational reward(const State& /*s*/, ActionId /*a*/) const {
        return Rational(0);
    }

    /// Membership test for the valid-state sample space. Defaults to
    /// accepting every feature-space point.
    virtual bool valid_state(const State& /*s*/) const { return true; }

    virtual std::string action_name(ActionId a) const {
        return "a" + std::to_string(a);
    }
};

/// Deterministic policy with provenance metadata.
class Policy {
public:
    virtual ~Policy() = default;
    virtual ActionId action(const State& s) const = 0;
    virtual std::string kind() const = 0; // "q_table" | "heuristic" | ...
    virtual std::uint64_t seed() const { return 0; }
};

/// Policy backed by an arbitrary function; used by the heuristic agents.
class FunctionPolicy final : public Policy {
public:
    FunctionPolicy(std::string kind, std::function<ActionId(const State&)> fn,
                   std::uint64_t seed = 0)
        : kind_(std::move(kind)), fn_(std::move(fn)), seed_(seed) {}

    ActionId action(const State& s) const override { return fn_(s); }
    std::string kind() const override { return kind_; }
    std::uint64_t seed() const override { return seed_; }

private:
    std::string kind_;
    std::function<ActionId(const State&)> fn_;
    std::uint64_t seed_;
};

/// One policy step of the whole frontier, merging duplicate successors.
WeightedStates next(const TransitionModel& model, const Policy& policy,
                    const WeightedStates& frontier);

/// k policy steps: succ^0(S) = S, succ^{n+1}(S) = next(succ^n(S)).
WeightedStates succ(const TransitionModel& model, const Policy& policy,
                    const WeightedStates& frontier, int k);

} // namespace hxplain

#pragma once

#include "hxplain/feature.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hxplain {

/// "feature i takes this value".
struct Literal {
    std::size_t feature;
    Value value;
    auto operator<=>(const Literal&) const = default;
};

/// Conjunction of equality literals, at most one per feature.
/// An empty term is the constant True.
class Term {
public:
    Term() = default;
    explicit Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
        std::sort(literals_.begin(), literals_.end());
        for (std::size_t i = 1; i < literals_.size(); ++i)
            if (literals_[i].feature == literals_[i - 1].feature)
                throw Error("Term: duplicate feature in conjunction");
    }

    const std::vector<Literal>& literals() const { return literals_; }

    bool eval(const State& s) const {
        for (const Literal& l : literals_)
            if (s.value(l.feature) != l.value) return false;
        return true;
    }

    /// The term fixing exactly `features` to s's values; s satisfies it.
    static Term from_assignment(const std::set<std::size_t>& features,
                                const State& s) {
        std::vector<Literal> lits;
        for (std::size_t f : features) lits.push_back({f, s.value(f)});
        return Term(std::move(lits));
    }

private:
    std::vector<Literal> literals_;
};

/// Boolean function of states. Either an explicit DNF over equality
/// literals (what PAXpred emits) or an env-native check (win, crash, ...)
/// with any needed context captured at construction.
class Predicate {
public:
    struct Native {
        std::string env;
        std::string name;
        std::function<bool(const State&)> fn;
        // Presentation-layer parameter echo for serialization.
        std::string params_json = "{}";
    };

    static Predicate dnf(std::vector<Term> terms) {
        Predicate p;
        p.terms_ = std::move(terms);
        return p;
    }
    static Predicate constant(bool value) {
        return value ? dnf({Term()}) : dnf({});
    }
    static Predicate native(Native n) {
        Predicate p;
        p.native_ = std::move(n);
        return p;
    }

    bool is_dnf() const { return !native_.has_value(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Native& native() const { return *native_; }

    bool eval(const State& s) const {
        if (native_) return native_->fn(s);
        for (const Term& t : terms_)
            if (t.eval(s)) return true;
        return false;
    }

private:
    std::vector<Term> terms_;
    std::optional<Native> native_;
};

} // namespace hxplain

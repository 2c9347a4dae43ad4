#pragma once

#include "hxplain/feature.hpp"
#include "hxplain/rational.hpp"

#include <map>

namespace hxplain {

/// A frontier: states with exact probabilities. Entries are kept in a sorted
/// map so iteration order is canonical and results are deterministic.
/// `complete` marks frontiers whose mass is exactly 1 by construction.
class WeightedStates {
public:
    using Map = std::map<State, Rational>;

    WeightedStates() = default;
    explicit WeightedStates(bool complete) : complete_(complete) {}

    /// Merges mass into the entry for s; zero mass is ignored.
    void add(const State& s, const Rational& pr) {
        if (pr.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace(s, pr);
        if (!inserted) it->second += pr;
    }

    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool complete() const { return complete_; }
    void set_complete(bool c) { complete_ = c; }

    Rational mass() const {
        Rational m;
        for (const auto& [s, pr] : entries_) m += pr;
        return m;
    }

    static WeightedStates single(const State& s) {
        WeightedStates w(true);
        w.add(s, Rational(1));
        return w;
    }

    bool operator==(const WeightedStates& o) const {
        return entries_ == o.entries_;
    }

private:
    Map entries_;
    bool complete_ = false;
};

} // namespace hxplain

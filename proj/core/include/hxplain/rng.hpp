#pragma once

#include "hxplain/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace hxplain {

/// Small deterministic PRNG (splitmix64 core). All randomness in the
/// project flows from one seed through named substreams derived with
/// `substream`, so results do not depend on evaluation order or thread
/// count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n >= 1.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection to avoid modulo bias.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// Index drawn proportionally to the given (exact) weights.
    std::size_t next_weighted(const std::vector<Rational>& weights) {
        double total = 0;
        for (const Rational& w : weights) total += w.to_double();
        double u = next_unit() * total;
        double acc = 0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i].to_double();
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

    /// Independent substream derived from (seed, label, index).
    static Rng substream(std::uint64_t seed, std::string_view label,
                         std::uint64_t index = 0) {
        std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a 64
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        Rng mix(seed ^ h);
        mix.state_ += 0x9e3779b97f4a7c15ULL * index;
        mix.next_u64();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace hxplain

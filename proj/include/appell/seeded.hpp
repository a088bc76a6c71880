#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

inline constexpr std::uint64_t kDefaultSeed = 20200824;  // fixed so sweeps replay byte-for-byte

/// Deterministic stream of small rationals p/q with p in [-6,6], q in [1,6].
/// mt19937_64 output is pinned by the standard, so a seed reproduces the same
/// stream on every platform.
class RationalPool {
public:
    explicit RationalPool(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    Rational next() {
        const auto num = static_cast<long long>(rng_() % 13) - 6;  // -6..6
        const auto den = static_cast<long long>(rng_() % 6) + 1;   // 1..6
        return Rational(BigInt(num), BigInt(den));
    }

    /// Next value from a restricted stream that never yields zero.
    Rational next_nonzero() {
        for (;;) {
            Rational r = next();
            if (!r.is_zero()) return r;
        }
    }

    std::vector<Rational> take(std::size_t count) {
        std::vector<Rational> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(next());
        return out;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace appell

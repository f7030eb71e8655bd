#pragma once

/// @file random.hpp
/// @brief Seeded random primitives with platform-independent output.
///
/// Standard library distributions are implementation-defined, so the
/// toolkit derives every draw directly from mt19937_64 output to keep runs
/// reproducible across compilers.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "wfa/core.hpp"

namespace wfa {

using Rng = std::mt19937_64;

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform in [0, n), unbiased. n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = rng();
    while (x >= limit) {
        x = rng();
    }
    return x % n;
}

/// Exponential with the given rate (mean 1/rate).
inline double exponential(Rng& rng, double rate) { return -std::log1p(-uniform01(rng)) / rate; }

/// Length uniform in [1, max_length], then each symbol uniform.
inline Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_length) {
    const std::size_t length = 1 + uniform_below(rng, max_length);
    Word w(length);
    for (auto& s : w) {
        s = static_cast<Symbol>(uniform_below(rng, alphabet_size));
    }
    return w;
}

} // namespace wfa

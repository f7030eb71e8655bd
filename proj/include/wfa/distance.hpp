#pragma once

/// @file distance.hpp
/// @brief Worst-case difference between two automata over words of length
/// 1..k: d(a, b) = max_w max{a(w) - b(w), b(w) - a(w)} = max_w |a(w) - b(w)|.

#include "wfa/ga.hpp"
#include "wfa/search.hpp"

namespace wfa {

struct Witness {
    Word word;
    Rational error;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct DirectionEstimate {
    Rational best;
    std::vector<Witness> witnesses; // highest observed errors, descending
    RunStats stats;
};

struct DistanceEstimate {
    Rational estimate; // lower bound on the exact distance
    DirectionEstimate a_minus_b;
    DirectionEstimate b_minus_a;
};

/// Runs the GA with `cfg` (cfg.max_length is k) on a - b and on b - a and
/// reports the larger best weight. Witness lists hold the `witness_count`
/// heaviest words each run observed. With jobs > 1 the two runs execute
/// concurrently; results do not depend on it.
DistanceEstimate distance_estimate(const Wfa& a, const Wfa& b, const GaConfig& cfg, std::size_t witness_count = 5,
                                   unsigned jobs = 1);

struct DistanceExact {
    Rational value;
    Word witness;
};

/// Exact distance by exhaustive search of both difference automata.
/// Throws EnumerationBudgetExceeded above `budget` words.
DistanceExact distance_exact(const Wfa& a, const Wfa& b, std::size_t k,
                             std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace wfa

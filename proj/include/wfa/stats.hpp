#pragma once

/// @file stats.hpp
/// @brief Per-run bookkeeping shared by the GA and the baseline solvers.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wfa/core.hpp"

namespace wfa {

struct Individual {
    Word word;
    Rational fitness;
    friend bool operator==(const Individual&, const Individual&) = default;
};

/// Ascending by fitness; ties shorter first, then lexicographic.
inline bool fitness_less(const Individual& a, const Individual& b) {
    if (a.fitness != b.fitness) {
        return a.fitness < b.fitness;
    }
    return shortlex_less(a.word, b.word);
}

struct RunStats {
    /// Every distinct word evaluated during the run, with its weight.
    std::unordered_map<Word, Rational, WordHash> observed;
    /// Evaluations performed, duplicates included.
    std::uint64_t total_evals = 0;
    std::optional<Individual> best;
    /// Generations since the best weight last strictly improved (reset when
    /// it triggers a mutation boost).
    std::size_t best_repeat_count = 0;
    std::size_t generations = 0;
    double wall_time = 0.0;

    /// Records one evaluation. The best is replaced only by a strictly
    /// greater weight, so the first word reaching the maximum is kept.
    void record(const Word& word, const Rational& weight) {
        ++total_evals;
        observed.try_emplace(word, weight);
        if (!best || weight > best->fitness) {
            best = Individual{word, weight};
        }
    }

    [[nodiscard]] double evals_per_second() const {
        return wall_time > 0.0 ? static_cast<double>(total_evals) / wall_time : 0.0;
    }

    /// Observed entries sorted by weight descending, ties shortlex.
    [[nodiscard]] std::vector<Individual> ranked_observed(std::size_t limit = SIZE_MAX) const;
};

} // namespace wfa

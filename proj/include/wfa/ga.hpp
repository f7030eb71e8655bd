#pragma once

/// @file ga.hpp
/// @brief Genetic algorithm for the bounded weight maximization problem.
///
/// Individuals are words of length 1..k and their fitness is the weight
/// assigned by the automaton. One generation:
///   1. select N parents by fitness rank (with repetition),
///   2. recombine consecutive pairs with two-point crossover into N children,
///   3. independently mutate each current individual with probability mp,
///   4. keep round(cr*N) children and N - round(cr*N) mutants, each picked by
///      rank selection without repeating an index,
///   5. sort ascending by fitness.
/// The run stops at a wall-clock timeout checked between generations, or
/// earlier at an optional generation or evaluation cap.

#include <cstdint>
#include <optional>
#include <utility>

#include "wfa/memo.hpp"
#include "wfa/random.hpp"
#include "wfa/stats.hpp"

namespace wfa {

enum class InitMethod { random, nbest };

struct GaConfig {
    std::size_t max_length = 20;       // k
    std::size_t population_size = 200; // N
    double selection_bias = 30.0;      // beta
    double children_rate = 0.8;
    double mutation_prob = 0.1;
    double per_symbol_rate = 0.1; // lambda
    double timeout_seconds = 120.0;
    std::size_t stagnation_threshold = 10;
    double mp_boost_factor = 3.0;
    std::uint64_t rng_seed = 0;
    std::optional<std::size_t> block_size_override;
    std::optional<std::size_t> max_generations;
    std::optional<std::uint64_t> max_evaluations;
    InitMethod init = InitMethod::random;
    std::uint64_t memo_budget = kDefaultMemoBudget;
};

/// Throws std::invalid_argument describing the first bad field.
void validate_config(const GaConfig& cfg);

struct Population {
    std::vector<Individual> members; // ascending fitness
    std::size_t generation = 0;
};

/// Evaluates through the memo table, records into stats and enforces the
/// 1 <= |w| <= k bound.
class Evaluator {
public:
    Evaluator(const Wfa& wfa, const MemoTable& table, std::size_t max_length, RunStats& stats)
        : wfa_(wfa), table_(table), max_length_(max_length), stats_(stats) {}

    Rational operator()(const Word& word);

private:
    const Wfa& wfa_;
    const MemoTable& table_;
    std::size_t max_length_;
    RunStats& stats_;
};

/// floor(n * log_beta(1 + u (beta - 1))) clamped to n - 1, for u in [0, 1).
std::size_t rank_index(std::size_t n, double beta, double u);

/// Rank-biased index into an ascending population: the top index is beta
/// times as likely as index 0.
std::size_t select_index(std::size_t n, double beta, Rng& rng);

/// `count` distinct indices in [0, n) drawn by select_index, resampling on
/// repeats.
std::vector<std::size_t> select_distinct(std::size_t n, std::size_t count, double beta, Rng& rng);

Population init_random(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg, Rng& rng, RunStats& stats);

struct NBestInit {
    Population population;
    std::size_t padded = 0; // random individuals added because the pool was short
};

/// The N highest-weight words among lengths 1..min(B, k), weights read off
/// the memo table. Pads with random individuals when the pool is smaller
/// than N.
NBestInit init_nbest(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg, Rng& rng, RunStats& stats);

/// Children for 1-based cut points i in [1, |v|] and j in [1, |w|]:
///   x = v_1..v_i . w_{j+1}..w_{lx},  lx = |w| if i + |w| - j <= k else k - i
///   y = w_1..w_j . v_{i+1}..v_{ly},  ly = |v| if j + |v| - i <= k else k - j
/// A tail whose end index does not exceed its start is empty.
std::pair<Word, Word> crossover_at(const Word& v, const Word& w, std::size_t i, std::size_t j, std::size_t k);

/// crossover_at with cut points drawn uniformly.
std::pair<Word, Word> crossover(const Word& v, const Word& w, std::size_t k, Rng& rng);

struct Mutation {
    Word word;
    std::size_t positions = 0; // positions visited by the exponential process
};

/// Walks positions generated by cumulative floor(Exp(lambda)) gaps (each
/// advancing at least one past the previous position) until a position
/// reaches the current length; applies a uniform choice of delete, insert
/// or replace-with-a-different-symbol at each. Deletion at length 1 and
/// insertion at length k are skipped.
Mutation mutate(const Word& w, std::size_t alphabet_size, std::size_t max_length, double lambda, Rng& rng);

/// One full generation. Reads stats.best_repeat_count to decide whether this
/// generation runs with a boosted mutation probability.
Population evolve_generation(const Population& pop, const Wfa& wfa, const MemoTable& table, const GaConfig& cfg,
                             Rng& rng, RunStats& stats);

struct GaResult {
    Individual best;
    RunStats stats;
    Population final_population;
    std::size_t block_size = 0;
    std::size_t padded = 0;
};

/// Builds the memo table (override, or the default block size shrunk until
/// it fits the budget) and runs to termination.
GaResult run_ga(const Wfa& wfa, const GaConfig& cfg);

/// Same, reusing a prebuilt table.
GaResult run_ga(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg);

/// Table with cfg.block_size_override or the fitted default.
MemoTable build_table_for(const Wfa& wfa, const GaConfig& cfg);

} // namespace wfa

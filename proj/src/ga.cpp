#include "wfa/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace wfa {

void validate_config(const GaConfig& cfg) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (cfg.max_length < 1) {
        fail("k must be at least 1");
    }
    if (cfg.population_size < 2) {
        fail("population size must be at least 2");
    }
    if (!(cfg.selection_bias > 1.0)) {
        fail("selection bias beta must be greater than 1");
    }
    if (!(cfg.children_rate >= 0.0 && cfg.children_rate <= 1.0)) {
        fail("children rate must lie in [0, 1]");
    }
    if (!(cfg.mutation_prob >= 0.0 && cfg.mutation_prob <= 1.0)) {
        fail("mutation probability must lie in [0, 1]");
    }
    if (!(cfg.per_symbol_rate > 0.0 && cfg.per_symbol_rate <= 1.0)) {
        fail("per-symbol rate lambda must lie in (0, 1]");
    }
    if (!(cfg.timeout_seconds > 0.0)) {
        fail("timeout must be positive");
    }
    if (!(cfg.mp_boost_factor >= 1.0)) {
        fail("mutation boost factor must be at least 1");
    }
    if (cfg.block_size_override && *cfg.block_size_override < 1) {
        fail("block size must be at least 1");
    }
}

Rational Evaluator::operator()(const Word& word) {
    if (word.empty() || word.size() > max_length_) {
        throw std::logic_error("individual of length " + std::to_string(word.size()) + " outside 1.." +
                               std::to_string(max_length_));
    }
    Rational weight = eval_weight_memo(wfa_, table_, word);
    stats_.record(word, weight);
    return weight;
}

std::size_t rank_index(std::size_t n, double beta, double u) {
    const double x = static_cast<double>(n) * std::log1p(u * (beta - 1.0)) / std::log(beta);
    if (!(x >= 0.0)) {
        return 0;
    }
    const auto idx = static_cast<std::size_t>(std::floor(x));
    return std::min(idx, n - 1);
}

std::size_t select_index(std::size_t n, double beta, Rng& rng) { return rank_index(n, beta, uniform01(rng)); }

std::vector<std::size_t> select_distinct(std::size_t n, std::size_t count, double beta, Rng& rng) {
    if (count > n) {
        throw std::invalid_argument("cannot select more distinct indices than available");
    }
    std::vector<char> used(n, 0);
    std::vector<std::size_t> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::size_t idx = select_index(n, beta, rng);
        if (!used[idx]) {
            used[idx] = 1;
            out.push_back(idx);
        }
    }
    return out;
}

namespace {

void sort_population(std::vector<Individual>& members) { std::sort(members.begin(), members.end(), fitness_less); }

} // namespace

Population init_random(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg, Rng& rng, RunStats& stats) {
    Evaluator eval(wfa, table, cfg.max_length, stats);
    Population pop;
    pop.members.reserve(cfg.population_size);
    for (std::size_t n = 0; n < cfg.population_size; ++n) {
        Word w = random_word(rng, wfa.alphabet_size(), cfg.max_length);
        Rational fit = eval(w);
        pop.members.push_back({std::move(w), std::move(fit)});
    }
    sort_population(pop.members);
    return pop;
}

NBestInit init_nbest(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg, Rng& rng, RunStats& stats) {
    const std::size_t max_len = std::min(table.block_size(), cfg.max_length);
    std::vector<Individual> pool;
    table.for_each([&](const Word& word, const SparseMatrix& product) {
        if (word.size() > max_len) {
            return;
        }
        pool.push_back({word, dot(vec_mat(wfa.initial_weights(), product), wfa.final_weights())});
    });
    auto better = [](const Individual& a, const Individual& b) {
        if (a.fitness != b.fitness) {
            return a.fitness > b.fitness;
        }
        return shortlex_less(a.word, b.word);
    };
    const std::size_t take = std::min(pool.size(), cfg.population_size);
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end(), better);
    pool.resize(take);

    NBestInit out;
    for (auto& ind : pool) {
        stats.record(ind.word, ind.fitness);
        out.population.members.push_back(std::move(ind));
    }
    Evaluator eval(wfa, table, cfg.max_length, stats);
    while (out.population.members.size() < cfg.population_size) {
        Word w = random_word(rng, wfa.alphabet_size(), cfg.max_length);
        Rational fit = eval(w);
        out.population.members.push_back({std::move(w), std::move(fit)});
        ++out.padded;
    }
    sort_population(out.population.members);
    return out;
}

std::pair<Word, Word> crossover_at(const Word& v, const Word& w, std::size_t i, std::size_t j, std::size_t k) {
    if (i < 1 || i > v.size() || j < 1 || j > w.size()) {
        throw std::out_of_range("crossover point outside parent");
    }
    const std::size_t lx = (i + w.size() - j <= k) ? w.size() : k - i;
    const std::size_t ly = (j + v.size() - i <= k) ? v.size() : k - j;
    Word x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i));
    if (lx > j) {
        x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.begin() + static_cast<std::ptrdiff_t>(lx));
    }
    Word y(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
    if (ly > i) {
        y.insert(y.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(ly));
    }
    return {std::move(x), std::move(y)};
}

std::pair<Word, Word> crossover(const Word& v, const Word& w, std::size_t k, Rng& rng) {
    const std::size_t i = 1 + uniform_below(rng, v.size());
    const std::size_t j = 1 + uniform_below(rng, w.size());
    return crossover_at(v, w, i, j, k);
}

Mutation mutate(const Word& w, std::size_t alphabet_size, std::size_t max_length, double lambda, Rng& rng) {
    constexpr double kFar = 1e15;
    auto gap = [&] { return static_cast<std::size_t>(std::floor(std::min(exponential(rng, lambda), kFar))); };
    Mutation m{w, 0};
    Word& out = m.word;
    std::size_t pos = gap();
    while (pos < out.size()) {
        ++m.positions;
        switch (uniform_below(rng, 3)) {
        case 0:
            if (out.size() > 1) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
            }
            break;
        case 1:
            if (out.size() < max_length) {
                const auto s = static_cast<Symbol>(uniform_below(rng, alphabet_size));
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), s);
            }
            break;
        default:
            if (alphabet_size > 1) {
                auto s = static_cast<Symbol>(uniform_below(rng, alphabet_size - 1));
                if (s >= out[pos]) {
                    ++s;
                }
                out[pos] = s;
            }
            break;
        }
        pos += std::max<std::size_t>(1, gap());
    }
    return m;
}

Population evolve_generation(const Population& pop, const Wfa& wfa, const MemoTable& table, const GaConfig& cfg,
                             Rng& rng, RunStats& stats) {
    const std::size_t n = pop.members.size();
    const auto& members = pop.members;
    Evaluator eval(wfa, table, cfg.max_length, stats);
    const std::optional<Rational> best_before = stats.best ? std::optional(stats.best->fitness) : std::nullopt;

    double mp = cfg.mutation_prob;
    if (stats.best_repeat_count > cfg.stagnation_threshold) {
        mp = std::min(1.0, mp * cfg.mp_boost_factor);
        stats.best_repeat_count = 0;
    }

    // Parents and crossover.
    std::vector<std::size_t> parents(n);
    for (auto& p : parents) {
        p = select_index(n, cfg.selection_bias, rng);
    }
    std::vector<Individual> children;
    children.reserve(n);
    for (std::size_t p = 0; p + 1 < n; p += 2) {
        auto [x, y] = crossover(members[parents[p]].word, members[parents[p + 1]].word, cfg.max_length, rng);
        Rational fx = eval(x);
        Rational fy = eval(y);
        children.push_back({std::move(x), std::move(fx)});
        children.push_back({std::move(y), std::move(fy)});
    }
    if (n % 2 == 1) {
        auto [x, y] = crossover(members[parents[n - 1]].word, members[parents[0]].word, cfg.max_length, rng);
        Rational fx = eval(x);
        children.push_back({std::move(x), std::move(fx)});
    }

    // Mutation of the current population.
    std::vector<Individual> mutants;
    mutants.reserve(n);
    for (const auto& ind : members) {
        if (uniform01(rng) < mp) {
            Mutation m = mutate(ind.word, wfa.alphabet_size(), cfg.max_length, cfg.per_symbol_rate, rng);
            if (m.word != ind.word) {
                Rational f = eval(m.word);
                mutants.push_back({std::move(m.word), std::move(f)});
                continue;
            }
        }
        mutants.push_back(ind);
    }

    sort_population(children);
    sort_population(mutants);

    // Replacement.
    const auto from_children =
        std::min<std::size_t>(n, static_cast<std::size_t>(std::llround(cfg.children_rate * static_cast<double>(n))));
    Population next;
    next.generation = pop.generation + 1;
    next.members.reserve(n);
    for (std::size_t idx : select_distinct(n, from_children, cfg.selection_bias, rng)) {
        next.members.push_back(children[idx]);
    }
    for (std::size_t idx : select_distinct(n, n - from_children, cfg.selection_bias, rng)) {
        next.members.push_back(mutants[idx]);
    }
    sort_population(next.members);

    ++stats.generations;
    if (best_before && stats.best && stats.best->fitness > *best_before) {
        stats.best_repeat_count = 0;
    } else {
        ++stats.best_repeat_count;
    }
    return next;
}

MemoTable build_table_for(const Wfa& wfa, const GaConfig& cfg) {
    if (cfg.block_size_override) {
        return MemoTable::build(wfa, *cfg.block_size_override, cfg.memo_budget);
    }
    // Blocks longer than k are never looked up.
    std::size_t b = std::min(default_block_size(wfa.alphabet_size(), wfa.n_states(), cfg.memo_budget),
                             std::max<std::size_t>(1, cfg.max_length));
    for (;;) {
        try {
            return MemoTable::build(wfa, b, cfg.memo_budget);
        } catch (const MemoBudgetExceeded&) {
            if (b == 1) {
                throw;
            }
            --b;
        }
    }
}

GaResult run_ga(const Wfa& wfa, const GaConfig& cfg) {
    validate_config(cfg);
    const MemoTable table = build_table_for(wfa, cfg);
    return run_ga(wfa, table, cfg);
}

GaResult run_ga(const Wfa& wfa, const MemoTable& table, const GaConfig& cfg) {
    validate_config(cfg);
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    auto elapsed = [&start] { return std::chrono::duration<double>(Clock::now() - start).count(); };

    GaResult result;
    result.block_size = table.block_size();
    Rng rng(cfg.rng_seed);
    RunStats& stats = result.stats;

    Population pop;
    if (cfg.init == InitMethod::nbest) {
        NBestInit init = init_nbest(wfa, table, cfg, rng, stats);
        pop = std::move(init.population);
        result.padded = init.padded;
    } else {
        pop = init_random(wfa, table, cfg, rng, stats);
    }

    for (;;) {
        if (cfg.max_generations && pop.generation >= *cfg.max_generations) {
            break;
        }
        if (cfg.max_evaluations && stats.total_evals >= *cfg.max_evaluations) {
            break;
        }
        if (elapsed() >= cfg.timeout_seconds) {
            break;
        }
        pop = evolve_generation(pop, wfa, table, cfg, rng, stats);
    }

    stats.wall_time = elapsed();
    result.best = *stats.best;
    result.final_population = std::move(pop);
    return result;
}

} // namespace wfa

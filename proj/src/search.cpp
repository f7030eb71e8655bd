#include "wfa/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "wfa/random.hpp"

namespace wfa {

SearchResult random_search(const Wfa& wfa, const MemoTable& table, std::size_t k, const SearchBudget& budget,
                           std::uint64_t seed) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (!budget.max_evaluations && !budget.timeout_seconds) {
        throw std::invalid_argument("random search needs an evaluation or time budget");
    }
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    auto elapsed = [&start] { return std::chrono::duration<double>(Clock::now() - start).count(); };

    Rng rng(seed);
    SearchResult result;
    RunStats& stats = result.stats;
    for (;;) {
        if (budget.max_evaluations && stats.total_evals >= *budget.max_evaluations) {
            break;
        }
        if (budget.timeout_seconds && (stats.total_evals & 0xFF) == 0 && stats.total_evals > 0 &&
            elapsed() >= *budget.timeout_seconds) {
            break;
        }
        Word w = random_word(rng, wfa.alphabet_size(), k);
        const Rational weight = eval_weight_memo(wfa, table, w);
        stats.record(w, weight);
    }
    stats.wall_time = elapsed();
    result.best = *stats.best;
    return result;
}

bool ranks_before(const ScoredWord& a, const ScoredWord& b) {
    if (a.weight != b.weight) {
        return a.weight > b.weight;
    }
    return shortlex_less(a.word, b.word);
}

EnumerationBudgetExceeded::EnumerationBudgetExceeded(std::uint64_t word_count, std::uint64_t budget)
    : std::runtime_error("enumeration of " +
                         (word_count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                                  : std::to_string(word_count)) +
                         " words exceeds budget of " + std::to_string(budget)),
      word_count_(word_count) {}

namespace {

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

/// Shared depth-first walk. `on_word` sees every visited word and returns
/// false to stop the walk; `skip_zero` decides whether the zero-weight
/// subtree below a zero prefix vector may be skipped.
class PrefixWalk {
public:
    PrefixWalk(const Wfa& wfa, std::size_t k) : wfa_(wfa), k_(k), vectors_(k + 1) {
        vectors_[0] = wfa.initial_weights();
    }

    template <typename OnWord, typename SkipZero>
    void run(OnWord&& on_word, SkipZero&& skip_zero) {
        stopped_ = false;
        word_.clear();
        descend(0, on_word, skip_zero);
    }

private:
    template <typename OnWord, typename SkipZero>
    void descend(std::size_t depth, OnWord& on_word, SkipZero& skip_zero) {
        if (depth == k_ || stopped_) {
            return;
        }
        if (is_zero_vector(vectors_[depth]) && skip_zero(word_)) {
            return;
        }
        for (Symbol a = 0; a < wfa_.alphabet_size() && !stopped_; ++a) {
            vec_mat_into(vectors_[depth], wfa_.sparse_transition(a), vectors_[depth + 1]);
            word_.push_back(a);
            const Rational weight = dot(vectors_[depth + 1], wfa_.final_weights());
            if (!on_word(word_, weight)) {
                stopped_ = true;
            } else {
                descend(depth + 1, on_word, skip_zero);
            }
            word_.pop_back();
        }
    }

    const Wfa& wfa_;
    std::size_t k_;
    std::vector<Vector> vectors_;
    Word word_;
    bool stopped_ = false;
};

void check_budget(const Wfa& wfa, std::size_t k, std::uint64_t budget) {
    const std::uint64_t count = memo_entry_count(wfa.alphabet_size(), k);
    if (count > budget) {
        throw EnumerationBudgetExceeded(count, budget);
    }
}

} // namespace

std::vector<ScoredWord> exhaustive_search(const Wfa& wfa, std::size_t k, std::size_t top_n, std::uint64_t budget) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    check_budget(wfa, k, budget);
    if (top_n == 0) {
        return {};
    }
    // Max-heap under ranks_before keeps the worst retained entry on top.
    std::vector<ScoredWord> heap;
    auto consider = [&](const Word& w, const Rational& weight) {
        if (heap.size() < top_n) {
            heap.push_back({w, weight});
            std::push_heap(heap.begin(), heap.end(), ranks_before);
            return true;
        }
        ScoredWord candidate{w, weight};
        if (ranks_before(candidate, heap.front())) {
            std::pop_heap(heap.begin(), heap.end(), ranks_before);
            heap.back() = std::move(candidate);
            std::push_heap(heap.begin(), heap.end(), ranks_before);
        }
        return true;
    };
    auto skip_zero = [&](const Word& prefix) {
        if (heap.size() < top_n) {
            return false;
        }
        // The best-ranked word below `prefix` is prefix . symbol 0, weight 0.
        ScoredWord best_below{prefix, Rational()};
        best_below.word.push_back(0);
        return !ranks_before(best_below, heap.front());
    };
    PrefixWalk walk(wfa, k);
    walk.run(consider, skip_zero);
    std::sort(heap.begin(), heap.end(), ranks_before);
    return heap;
}

std::optional<ScoredWord> find_word(const Wfa& wfa, std::size_t k, const std::function<bool(const Rational&)>& accept,
                                    std::uint64_t budget) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    check_budget(wfa, k, budget);
    const bool zero_accepted = accept(Rational());
    std::optional<ScoredWord> found;
    auto on_word = [&](const Word& w, const Rational& weight) {
        if (accept(weight)) {
            found = ScoredWord{w, weight};
            return false;
        }
        return true;
    };
    auto skip_zero = [&](const Word&) { return !zero_accepted; };
    PrefixWalk walk(wfa, k);
    walk.run(on_word, skip_zero);
    return found;
}

std::size_t position_in(const std::vector<ScoredWord>& table, const Rational& weight) {
    return 1 + static_cast<std::size_t>(
                   std::count_if(table.begin(), table.end(), [&](const ScoredWord& s) { return s.weight > weight; }));
}

bool verify_certificate(const Wfa& wfa, const Word& word, std::size_t k, const Rational& nu, CertificateMode mode) {
    if (word.size() > k) {
        return false;
    }
    const Rational w = eval_weight(wfa, word);
    return mode == CertificateMode::threshold ? w >= nu : w == nu;
}

} // namespace wfa

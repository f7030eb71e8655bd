#pragma once

/// @file search.hpp
/// @brief Baseline solvers: random search, exhaustive enumeration, and the
/// polynomial certificate check for the bounded decision problems.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "wfa/memo.hpp"
#include "wfa/stats.hpp"

namespace wfa {

struct SearchBudget {
    std::optional<std::uint64_t> max_evaluations;
    std::optional<double> timeout_seconds;
};

struct SearchResult {
    Individual best;
    RunStats stats;
};

/// Samples words as the GA initializer does (length uniform in [1, k], then
/// uniform symbols) until the budget runs out, keeping the running maximum.
/// At least one budget limit must be set.
SearchResult random_search(const Wfa& wfa, const MemoTable& table, std::size_t k, const SearchBudget& budget,
                           std::uint64_t seed);

struct ScoredWord {
    Word word;
    Rational weight;
    friend bool operator==(const ScoredWord&, const ScoredWord&) = default;
};

/// Descending weight, ties shorter first, then lexicographic.
bool ranks_before(const ScoredWord& a, const ScoredWord& b);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

class EnumerationBudgetExceeded : public std::runtime_error {
public:
    EnumerationBudgetExceeded(std::uint64_t word_count, std::uint64_t budget);
    [[nodiscard]] std::uint64_t word_count() const { return word_count_; }

private:
    std::uint64_t word_count_;
};

/// The top_n words of Sigma^{<=k} (lengths 1..k) ordered by ranks_before.
///
/// Depth-first over prefixes, carrying i^T * M_{a_1} ... M_{a_j} so each
/// extension costs one vector-matrix product. A prefix whose vector is zero
/// gives weight 0 to its whole subtree; such subtrees are skipped once no
/// word in them could enter the result. This is exact, not a heuristic bound.
/// Throws EnumerationBudgetExceeded when |Sigma^{<=k}| exceeds `budget`.
std::vector<ScoredWord> exhaustive_search(const Wfa& wfa, std::size_t k, std::size_t top_n = 20,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// First word in depth-first order (prefix before extension, symbols in
/// index order) with length 1..k whose weight satisfies `accept`.
std::optional<ScoredWord> find_word(const Wfa& wfa, std::size_t k, const std::function<bool(const Rational&)>& accept,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// 1-based rank a weight would take in a descending table: one plus the
/// number of entries strictly heavier.
std::size_t position_in(const std::vector<ScoredWord>& table, const Rational& weight);

enum class CertificateMode { threshold, equality };

/// |word| <= k and W(word) >= nu (threshold) or W(word) = nu (equality).
bool verify_certificate(const Wfa& wfa, const Word& word, std::size_t k, const Rational& nu, CertificateMode mode);

} // namespace wfa

#pragma once

/// @file memo.hpp
/// @brief Precomputed block products for fast word evaluation.
///
/// A MemoTable maps every word of length 1..B to the product of its
/// transition matrices. Evaluating a word of length n then folds the
/// initial vector through floor(n/B) length-B blocks and one remainder
/// block instead of n single-symbol matrices. The table is immutable once
/// built and may be shared between threads.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "wfa/core.hpp"

namespace wfa {

/// Memory budget, in stored rational cells: (sum_{l<=B} |Sigma|^l) * |Q|^2.
/// Large enough for the block sizes used on 4-, 6- and 10-symbol automata
/// (7, 6 and 5 respectively for up to 12 states).
inline constexpr std::uint64_t kDefaultMemoBudget = std::uint64_t{1} << 24;

class MemoBudgetExceeded : public std::runtime_error {
public:
    MemoBudgetExceeded(std::uint64_t required, std::uint64_t budget);
    [[nodiscard]] std::uint64_t required() const { return required_; }
    [[nodiscard]] std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

class StaleMemoTable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// sum_{l=1..block_size} alphabet_size^l, saturating at UINT64_MAX.
std::uint64_t memo_entry_count(std::size_t alphabet_size, std::size_t block_size);

/// Block size for a given automaton shape. 4, 6 and 10-symbol alphabets use
/// 7, 6 and 5, one less above 12 states; other shapes get the largest B
/// whose table fits the budget. Never below 1.
std::size_t default_block_size(std::size_t alphabet_size, std::size_t n_states,
                               std::uint64_t budget = kDefaultMemoBudget);

class MemoTable {
public:
    /// Builds every product incrementally: entry(w a) = entry(w) * M_a.
    static MemoTable build(const Wfa& wfa, std::size_t block_size, std::uint64_t budget = kDefaultMemoBudget);

    [[nodiscard]] std::size_t block_size() const { return block_size_; }
    [[nodiscard]] std::size_t alphabet_size() const { return alphabet_size_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::uint64_t wfa_fingerprint() const { return fingerprint_; }

    /// Product for 1 <= |word| <= block_size.
    [[nodiscard]] const SparseMatrix& entry(const Word& word) const;
    [[nodiscard]] const SparseMatrix& entry(const Symbol* first, std::size_t length) const;

    /// Visits every key in order of length, then lexicographically.
    void for_each(const std::function<void(const Word&, const SparseMatrix&)>& visit) const;

private:
    MemoTable() = default;
    [[nodiscard]] std::size_t slot(const Symbol* first, std::size_t length) const;

    std::size_t block_size_ = 0;
    std::size_t alphabet_size_ = 0;
    std::uint64_t fingerprint_ = 0;
    std::vector<std::size_t> offsets_; // offsets_[l] = index of the first length-l key
    std::vector<SparseMatrix> entries_;
};

/// Same value as eval_weight, computed through the table. Throws
/// StaleMemoTable when the table was built for a different automaton.
Rational eval_weight_memo(const Wfa& wfa, const MemoTable& table, const Word& word);

} // namespace wfa

#include "wfa/memo.hpp"

#include <algorithm>
#include <limits>

namespace wfa {

MemoBudgetExceeded::MemoBudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("memo table needs " + std::to_string(required) + " rational cells, budget is " +
                         std::to_string(budget)),
      required_(required), budget_(budget) {}

std::uint64_t memo_entry_count(std::size_t alphabet_size, std::size_t block_size) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t l = 1; l <= block_size; ++l) {
        if (alphabet_size != 0 && layer > kMax / alphabet_size) {
            return kMax;
        }
        layer *= alphabet_size;
        if (total > kMax - layer) {
            return kMax;
        }
        total += layer;
    }
    return total;
}

namespace {

std::uint64_t required_cells(std::size_t alphabet_size, std::size_t n_states, std::size_t block_size) {
    const std::uint64_t entries = memo_entry_count(alphabet_size, block_size);
    const std::uint64_t cells = std::uint64_t{n_states} * n_states;
    if (cells != 0 && entries > std::numeric_limits<std::uint64_t>::max() / cells) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return entries * cells;
}

} // namespace

std::size_t default_block_size(std::size_t alphabet_size, std::size_t n_states, std::uint64_t budget) {
    std::size_t fit = 1;
    if (alphabet_size > 1) {
        while (fit < 64 && required_cells(alphabet_size, n_states, fit + 1) <= budget) {
            ++fit;
        }
    }
    std::size_t tabled = 0;
    switch (alphabet_size) {
    case 4: tabled = 7; break;
    case 6: tabled = 6; break;
    case 10: tabled = 5; break;
    default: break;
    }
    if (tabled == 0) {
        return fit;
    }
    if (n_states > 12) {
        --tabled;
    }
    return std::max<std::size_t>(1, std::min(tabled, fit));
}

MemoTable MemoTable::build(const Wfa& wfa, std::size_t block_size, std::uint64_t budget) {
    if (block_size == 0) {
        throw std::invalid_argument("memo block size must be at least 1");
    }
    const std::size_t sigma = wfa.alphabet_size();
    const std::uint64_t required = required_cells(sigma, wfa.n_states(), block_size);
    if (required > budget) {
        throw MemoBudgetExceeded(required, budget);
    }
    MemoTable t;
    t.block_size_ = block_size;
    t.alphabet_size_ = sigma;
    t.fingerprint_ = wfa.fingerprint();
    t.offsets_.assign(block_size + 2, 0);
    std::size_t layer = 1;
    for (std::size_t l = 1; l <= block_size; ++l) {
        layer *= sigma;
        t.offsets_[l + 1] = t.offsets_[l] + layer;
    }
    t.entries_.reserve(t.offsets_[block_size + 1]);
    for (Symbol a = 0; a < sigma; ++a) {
        t.entries_.push_back(wfa.sparse_transition(a));
    }
    // Key order within a length is the base-|Sigma| value of the word, so the
    // extensions of the j-th length-(l-1) key occupy slots j*|Sigma| .. j*|Sigma|+|Sigma|-1.
    for (std::size_t l = 2; l <= block_size; ++l) {
        const std::size_t prev_begin = t.offsets_[l - 1];
        const std::size_t prev_end = t.offsets_[l];
        for (std::size_t j = prev_begin; j < prev_end; ++j) {
            for (Symbol a = 0; a < sigma; ++a) {
                t.entries_.push_back(t.entries_[j].multiply(wfa.sparse_transition(a)));
            }
        }
    }
    return t;
}

std::size_t MemoTable::slot(const Symbol* first, std::size_t length) const {
    if (length == 0 || length > block_size_) {
        throw std::out_of_range("memo key length " + std::to_string(length) + " outside 1.." +
                                std::to_string(block_size_));
    }
    std::size_t code = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (first[i] >= alphabet_size_) {
            throw InvalidWord("symbol index " + std::to_string(first[i]) + " out of range");
        }
        code = code * alphabet_size_ + first[i];
    }
    return offsets_[length] + code;
}

const SparseMatrix& MemoTable::entry(const Word& word) const { return entry(word.data(), word.size()); }

const SparseMatrix& MemoTable::entry(const Symbol* first, std::size_t length) const {
    return entries_[slot(first, length)];
}

void MemoTable::for_each(const std::function<void(const Word&, const SparseMatrix&)>& visit) const {
    Word word;
    for (std::size_t l = 1; l <= block_size_; ++l) {
        word.assign(l, 0);
        for (std::size_t idx = offsets_[l]; idx < offsets_[l + 1]; ++idx) {
            visit(word, entries_[idx]);
            for (std::size_t pos = l; pos-- > 0;) {
                if (++word[pos] < alphabet_size_) {
                    break;
                }
                word[pos] = 0;
            }
        }
    }
}

Rational eval_weight_memo(const Wfa& wfa, const MemoTable& table, const Word& word) {
    if (table.wfa_fingerprint() != wfa.fingerprint()) {
        throw StaleMemoTable("memo table was built for a different automaton");
    }
    check_word(wfa, word);
    const std::size_t b = table.block_size();
    Vector v = wfa.initial_weights();
    Vector next;
    std::size_t pos = 0;
    while (pos < word.size()) {
        const std::size_t len = std::min(b, word.size() - pos);
        vec_mat_into(v, table.entry(word.data() + pos, len), next);
        v.swap(next);
        pos += len;
    }
    return dot(v, wfa.final_weights());
}

} // namespace wfa

#pragma once

/// @file core.hpp
/// @brief Weighted finite automata over exact rationals.
///
/// A Wfa is the tuple (Q, Sigma, {M_a}, i, f). The weight of a word
/// a_1 ... a_n is i^T * M_{a_1} * ... * M_{a_n} * f. Two evaluation routes
/// are provided: the matrix route (eval_weight), folded left to right as
/// vector-matrix products, and the transition-system route
/// (eval_weight_paths), which sums the weights of all accepting paths.
/// They agree on every input and are used to check each other.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wfa/rational.hpp"

namespace wfa {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using Vector = std::vector<Rational>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ULL ^ w.size();
        for (Symbol s : w) {
            h = (h ^ s) * 1099511628211ULL;
        }
        return h;
    }
};

/// Total order used wherever words need a deterministic tie-break:
/// shorter first, then lexicographic by symbol index.
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

class InvalidWfa : public std::invalid_argument {
public:
    explicit InvalidWfa(std::vector<std::string> violations);
    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

class InvalidWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix. Dimensions are not constrained here; square-ness
/// is a Wfa invariant checked by validate().
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Row-compressed copy of a square matrix holding only nonzero entries.
class SparseMatrix {
public:
    struct Entry {
        std::uint32_t col;
        Rational value;
    };

    SparseMatrix() = default;
    explicit SparseMatrix(const Matrix& dense);

    [[nodiscard]] std::size_t dim() const { return rows_.size(); }
    [[nodiscard]] const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] Matrix to_dense() const;

    /// this * rhs, counting multiplications.
    [[nodiscard]] SparseMatrix multiply(const SparseMatrix& rhs) const;

private:
    std::vector<std::vector<Entry>> rows_;
};

/// Multiplication counter used to compare evaluation strategies without
/// relying on wall-clock time. Thread-local.
namespace instrument {
std::uint64_t multiplications();
void reset_multiplications();
void add_multiplications(std::uint64_t n);
} // namespace instrument

/// v^T * M, skipping zero entries of v and M. Counts performed multiplications.
Vector vec_mat(const Vector& v, const SparseMatrix& m);
/// v^T * f.
Rational dot(const Vector& v, const Vector& f);
/// In-place variant of vec_mat reusing `out`'s storage.
void vec_mat_into(const Vector& v, const SparseMatrix& m, Vector& out);

/// Raw automaton data as read from a document, before validation.
struct WfaParts {
    std::vector<std::string> alphabet;
    std::size_t n_states = 0;
    Vector initial;
    Vector final;
    std::vector<Matrix> transitions; // one per alphabet symbol, same order
};

/// One entry per violated invariant; empty when the parts form a valid Wfa.
std::vector<std::string> validate(const WfaParts& parts);

class Wfa {
public:
    /// Throws InvalidWfa carrying every violation found by validate().
    explicit Wfa(WfaParts parts);

    [[nodiscard]] const std::vector<std::string>& alphabet() const { return parts_.alphabet; }
    [[nodiscard]] std::size_t alphabet_size() const { return parts_.alphabet.size(); }
    [[nodiscard]] std::size_t n_states() const { return parts_.n_states; }
    [[nodiscard]] const Vector& initial_weights() const { return parts_.initial; }
    [[nodiscard]] const Vector& final_weights() const { return parts_.final; }
    [[nodiscard]] const Matrix& transition(Symbol a) const { return parts_.transitions.at(a); }
    [[nodiscard]] const SparseMatrix& sparse_transition(Symbol a) const { return sparse_.at(a); }
    [[nodiscard]] const WfaParts& parts() const { return parts_; }

    [[nodiscard]] std::optional<Symbol> symbol_index(std::string_view name) const;

    /// True when every symbol name is a single character, in which case words
    /// are written as plain strings; otherwise symbols are space separated.
    [[nodiscard]] bool compact_symbols() const { return compact_; }

    /// Content hash of the canonical serialization.
    [[nodiscard]] std::uint64_t fingerprint() const { return fingerprint_; }

private:
    WfaParts parts_;
    std::vector<SparseMatrix> sparse_;
    std::unordered_map<std::string, Symbol> index_;
    bool compact_ = true;
    std::uint64_t fingerprint_ = 0;
};

/// Throws InvalidWord naming the first out-of-range index.
void check_word(const Wfa& wfa, const Word& word);

Word parse_word(const Wfa& wfa, std::string_view text);
std::string format_word(const Wfa& wfa, const Word& word);
std::string format_word(const std::vector<std::string>& alphabet, const Word& word);

/// i^T * M_{a_1} * ... * M_{a_n} * f, evaluated left to right.
Rational eval_weight(const Wfa& wfa, const Word& word);

struct Transition {
    std::size_t source;
    Symbol symbol;
    std::size_t dest;
    friend bool operator==(const Transition&, const Transition&) = default;
};
using Path = std::vector<Transition>;

/// All paths reading `word` from a state with nonzero initial weight to a
/// state with nonzero final weight, following nonzero transitions only.
/// Exponential in |word|; meant for small instances.
std::vector<Path> accepting_paths(const Wfa& wfa, const Word& word);

/// Sum over accepting paths of i(q_0) * prod M_a(q,q') * f(q_n).
/// The empty word evaluates to i^T * f.
Rational eval_weight_paths(const Wfa& wfa, const Word& word);

bool is_probabilistic(const Wfa& wfa);

} // namespace wfa

#pragma once

/// @file algebra.hpp
/// @brief Composition operations on WFAs sharing an alphabet.
///
/// For every word w:
///   negate(a)(w)        = -a(w)
///   sum(a, b)(w)        = a(w) + b(w)
///   subtract(a, b)(w)   = a(w) - b(w)
///   product(a, b)(w)    = a(w) * b(w)
///   add_scalar(a, c)(w) = a(w) + c
///
/// Binary operations require identical alphabets (same names, same order).

#include <stdexcept>

#include "wfa/core.hpp"

namespace wfa {

class CompositionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Wfa negate(const Wfa& a);

/// Block-diagonal union; |Q| = |Q_a| + |Q_b|.
Wfa sum(const Wfa& a, const Wfa& b);

/// sum(a, negate(b)).
Wfa subtract(const Wfa& a, const Wfa& b);

/// Kronecker product; state (p, q) maps to p * |Q_b| + q.
Wfa product(const Wfa& a, const Wfa& b);

/// Adds one state q_c with initial weight c, final weight 1 and a unit
/// self-loop on every symbol, so the added term is c for every word length.
Wfa add_scalar(const Wfa& a, const Rational& c);

/// One-state automaton with weight c on every word (including the empty word).
Wfa constant(const std::vector<std::string>& alphabet, const Rational& c);

} // namespace wfa

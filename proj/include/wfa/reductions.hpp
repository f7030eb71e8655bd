#pragma once

/// @file reductions.hpp
/// @brief Hamiltonian cycle to bounded equality reachability, its two-symbol
/// re-encoding, and equality to threshold reachability.
///
/// Each construction maps yes-instances to yes-instances and no-instances to
/// no-instances, so the outputs double as hard test inputs with a known
/// answer.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "wfa/core.hpp"

namespace wfa {

/// Simple directed graph. Self-loops are allowed.
struct DiGraph {
    std::size_t n_vertices = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    /// Throws std::invalid_argument on an endpoint out of range.
    void add_edge(std::size_t u, std::size_t v);
};

/// Exists w with 1 <= |w| <= length_bound and W(w) = target.
struct BerpInstance {
    Wfa wfa;
    std::size_t length_bound;
    Rational target;
};

/// Exists w with 1 <= |w| <= length_bound and W(w) >= threshold.
struct BtrpInstance {
    Wfa wfa;
    std::size_t length_bound;
    Rational threshold;
};

/// The first n primes, by trial division.
std::vector<std::uint64_t> primes(std::size_t n);

/// Product of the first n primes.
Rational primorial(std::size_t n);

/// Symbol name for edge (u, v): "l<u>_<v>".
std::string edge_symbol(std::size_t u, std::size_t v);

/// One symbol per edge, in (u, v) order. The matrix of edge (u, v) holds the
/// (v+1)-th prime at (u, v). Initial and final weight sit on vertex 0 only,
/// so a word reaching the primorial of |V| in at most |V| steps is a closed
/// walk through 0 that enters every vertex exactly once: a Hamiltonian
/// cycle. Putting weight 1 on every state instead would also accept open
/// Hamiltonian paths.
///
/// A graph without edges gets a single placeholder symbol "none" with a zero
/// matrix, since automata need a non-empty alphabet.
BerpInstance hcp_to_berp(const DiGraph& g);

/// Number of bits used per edge symbol: ceil(log2 |E|).
std::size_t two_symbol_code_length(std::size_t n_edges);

/// Re-encodes an instance over symbols {a, b}. Every original symbol becomes
/// a chain of L = ceil(log2 |Sigma|) transitions spelling its index in binary
/// (a = 0, most significant bit first) through L - 1 fresh states with zero
/// initial and final weight. The first L - 1 steps carry weight 1 and the
/// last carries the original entry. Requires |Sigma| >= 2; the bound
/// becomes L * k.
BerpInstance to_two_symbols(const BerpInstance& instance);

/// B = (A + 1 - t) * (1 + t - A) with threshold 1: W_B(w) = (W_A(w) + 1 - t)(1 + t - W_A(w))
/// is at most 1, with equality exactly when W_A(w) = t.
BtrpInstance berp_to_btrp(const BerpInstance& instance);

} // namespace wfa

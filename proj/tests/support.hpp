#pragma once

// Shared helpers for the test binaries.

#include <algorithm>
#include <numeric>
#include <vector>

#include "wfa/core.hpp"
#include "wfa/random.hpp"
#include "wfa/reductions.hpp"

namespace wfa::test {

/// Small rationals p/q with p in [-3, 3], q in {1, 2, 3}.
inline Rational small_rational(Rng& rng) {
    const long p = static_cast<long>(uniform_below(rng, 7)) - 3;
    const long q = static_cast<long>(uniform_below(rng, 3)) + 1;
    return Rational(p, q);
}

inline std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(1, static_cast<char>('a' + i));
    }
    return out;
}

/// Random automaton over letters(sigma); each entry is nonzero with
/// probability `density`.
inline Wfa random_wfa(Rng& rng, std::size_t n, std::size_t sigma, double density = 0.6) {
    WfaParts p;
    p.alphabet = letters(sigma);
    p.n_states = n;
    auto cell = [&] { return uniform01(rng) < density ? small_rational(rng) : Rational(); };
    for (std::size_t q = 0; q < n; ++q) {
        p.initial.push_back(cell());
        p.final.push_back(cell());
    }
    for (std::size_t s = 0; s < sigma; ++s) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) = cell();
            }
        }
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

/// One-state automaton with i = f = 1 and scalar matrices.
inline Wfa scalar_wfa(const std::vector<Rational>& per_symbol) {
    WfaParts p;
    p.alphabet = letters(per_symbol.size());
    p.n_states = 1;
    p.initial = {1};
    p.final = {1};
    for (const auto& x : per_symbol) {
        Matrix m(1, 1);
        m(0, 0) = x;
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

/// Every word over [0, sigma) with min_len <= length <= max_len, shortlex.
inline std::vector<Word> all_words(std::size_t sigma, std::size_t min_len, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        Word w(len, 0);
        for (;;) {
            out.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == sigma) {
                w[--i] = 0;
            }
            if (i == 0) {
                break;
            }
            ++w[i - 1];
        }
    }
    return out;
}

/// Hamiltonian cycle by trying every vertex order starting at 0.
inline bool has_hamiltonian_cycle(const DiGraph& g) {
    const std::size_t n = g.n_vertices;
    if (n == 1) {
        return g.edges.contains({0, 0});
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            ok = g.edges.contains({order[i], order[(i + 1) % n]});
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
}

inline DiGraph random_digraph(Rng& rng, std::size_t n, double p) {
    DiGraph g;
    g.n_vertices = n;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (uniform01(rng) < p) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// Every digraph on n vertices (self-loops included), indexed by edge mask.
inline DiGraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
    DiGraph g;
    g.n_vertices = n;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> (u * n + v) & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

} // namespace wfa::test

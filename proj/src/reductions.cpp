#include "wfa/reductions.hpp"

#include <stdexcept>

#include "wfa/algebra.hpp"

namespace wfa {

void DiGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_vertices || v >= n_vertices) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside " +
                                    std::to_string(n_vertices) + " vertices");
    }
    edges.emplace(u, v);
}

std::vector<std::uint64_t> primes(std::size_t n) {
    std::vector<std::uint64_t> out;
    out.reserve(n);
    for (std::uint64_t c = 2; out.size() < n; ++c) {
        bool prime = true;
        for (std::uint64_t p : out) {
            if (p * p > c) {
                break;
            }
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            out.push_back(c);
        }
    }
    return out;
}

Rational primorial(std::size_t n) {
    mpz_class acc = 1;
    for (std::uint64_t p : primes(n)) {
        acc *= static_cast<unsigned long>(p);
    }
    return Rational(mpq_class(acc));
}

std::string edge_symbol(std::size_t u, std::size_t v) { return "l" + std::to_string(u) + "_" + std::to_string(v); }

BerpInstance hcp_to_berp(const DiGraph& g) {
    if (g.n_vertices < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    const std::size_t n = g.n_vertices;
    const std::vector<std::uint64_t> mu = primes(n);
    WfaParts p;
    p.n_states = n;
    p.initial.assign(n, Rational());
    p.final.assign(n, Rational());
    p.initial[0] = 1;
    p.final[0] = 1;
    for (const auto& [u, v] : g.edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint outside the vertex range");
        }
        p.alphabet.push_back(edge_symbol(u, v));
        Matrix m(n, n);
        m(u, v) = Rational(static_cast<long>(mu[v]));
        p.transitions.push_back(std::move(m));
    }
    if (p.alphabet.empty()) {
        p.alphabet.emplace_back("none");
        p.transitions.emplace_back(n, n);
    }
    return BerpInstance{Wfa(std::move(p)), n, primorial(n)};
}

std::size_t two_symbol_code_length(std::size_t n_edges) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n_edges) {
        ++bits;
    }
    return bits;
}

BerpInstance to_two_symbols(const BerpInstance& instance) {
    const Wfa& a = instance.wfa;
    const std::size_t sigma = a.alphabet_size();
    if (sigma < 2) {
        throw std::invalid_argument("two-symbol encoding needs at least two symbols (code length would be 0)");
    }
    const std::size_t L = two_symbol_code_length(sigma);
    const std::size_t n = a.n_states();

    struct Edge {
        std::size_t from;
        std::size_t to;
        Symbol symbol;
        Rational weight;
    };
    std::vector<Edge> chains;
    for (Symbol s = 0; s < sigma; ++s) {
        const SparseMatrix& m = a.sparse_transition(s);
        for (std::size_t r = 0; r < n; ++r) {
            for (const auto& [c, w] : m.row(r)) {
                chains.push_back({r, c, s, w});
            }
        }
    }

    const std::size_t total = n + chains.size() * (L - 1);
    std::vector<Matrix> bit_matrix(2, Matrix(total, total));
    std::size_t next_aux = n;
    for (const Edge& e : chains) {
        std::size_t at = e.from;
        for (std::size_t b = 0; b < L; ++b) {
            const std::size_t bit = (e.symbol >> (L - 1 - b)) & 1U;
            const bool last = b + 1 == L;
            const std::size_t to = last ? e.to : next_aux++;
            bit_matrix[bit](at, to) = last ? e.weight : Rational(1);
            at = to;
        }
    }

    WfaParts p;
    p.alphabet = {"a", "b"};
    p.n_states = total;
    p.initial = a.initial_weights();
    p.initial.resize(total);
    p.final = a.final_weights();
    p.final.resize(total);
    p.transitions = std::move(bit_matrix);
    return BerpInstance{Wfa(std::move(p)), instance.length_bound * L, instance.target};
}

BtrpInstance berp_to_btrp(const BerpInstance& instance) {
    const Rational& t = instance.target;
    const Wfa left = add_scalar(instance.wfa, Rational(1) - t);
    const Wfa right = add_scalar(negate(instance.wfa), Rational(1) + t);
    return BtrpInstance{product(left, right), instance.length_bound, Rational(1)};
}

} // namespace wfa

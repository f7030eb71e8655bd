#include "wfa/algebra.hpp"

namespace wfa {

namespace {

std::string describe(const std::vector<std::string>& alphabet) {
    std::string out = "{";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        out += (i ? "," : "") + alphabet[i];
    }
    return out + "}";
}

void require_same_alphabet(const Wfa& a, const Wfa& b) {
    if (a.alphabet() != b.alphabet()) {
        throw CompositionError("alphabet mismatch: " + describe(a.alphabet()) + " vs " + describe(b.alphabet()));
    }
}

} // namespace

Wfa negate(const Wfa& a) {
    WfaParts p = a.parts();
    for (auto& x : p.initial) {
        x = -x;
    }
    return Wfa(std::move(p));
}

Wfa sum(const Wfa& a, const Wfa& b) {
    require_same_alphabet(a, b);
    const std::size_t na = a.n_states();
    const std::size_t nb = b.n_states();
    WfaParts p;
    p.alphabet = a.alphabet();
    p.n_states = na + nb;
    p.initial = a.initial_weights();
    p.initial.insert(p.initial.end(), b.initial_weights().begin(), b.initial_weights().end());
    p.final = a.final_weights();
    p.final.insert(p.final.end(), b.final_weights().begin(), b.final_weights().end());
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        Matrix m(na + nb, na + nb);
        const Matrix& ma = a.transition(s);
        const Matrix& mb = b.transition(s);
        for (std::size_t r = 0; r < na; ++r) {
            for (std::size_t c = 0; c < na; ++c) {
                m(r, c) = ma(r, c);
            }
        }
        for (std::size_t r = 0; r < nb; ++r) {
            for (std::size_t c = 0; c < nb; ++c) {
                m(na + r, na + c) = mb(r, c);
            }
        }
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

Wfa subtract(const Wfa& a, const Wfa& b) { return sum(a, negate(b)); }

Wfa product(const Wfa& a, const Wfa& b) {
    require_same_alphabet(a, b);
    const std::size_t na = a.n_states();
    const std::size_t nb = b.n_states();
    WfaParts p;
    p.alphabet = a.alphabet();
    p.n_states = na * nb;
    p.initial.resize(na * nb);
    p.final.resize(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            p.initial[i * nb + j] = a.initial_weights()[i] * b.initial_weights()[j];
            p.final[i * nb + j] = a.final_weights()[i] * b.final_weights()[j];
        }
    }
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        const Matrix& ma = a.transition(s);
        const Matrix& mb = b.transition(s);
        Matrix m(na * nb, na * nb);
        for (std::size_t r1 = 0; r1 < na; ++r1) {
            for (std::size_t c1 = 0; c1 < na; ++c1) {
                if (ma(r1, c1).is_zero()) {
                    continue;
                }
                for (std::size_t r2 = 0; r2 < nb; ++r2) {
                    for (std::size_t c2 = 0; c2 < nb; ++c2) {
                        if (!mb(r2, c2).is_zero()) {
                            m(r1 * nb + r2, c1 * nb + c2) = ma(r1, c1) * mb(r2, c2);
                        }
                    }
                }
            }
        }
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

Wfa add_scalar(const Wfa& a, const Rational& c) {
    const std::size_t n = a.n_states();
    WfaParts p;
    p.alphabet = a.alphabet();
    p.n_states = n + 1;
    p.initial = a.initial_weights();
    p.initial.push_back(c);
    p.final = a.final_weights();
    p.final.emplace_back(1);
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        const Matrix& ma = a.transition(s);
        Matrix m(n + 1, n + 1);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) {
                m(r, col) = ma(r, col);
            }
        }
        m(n, n) = Rational(1);
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

Wfa constant(const std::vector<std::string>& alphabet, const Rational& c) {
    WfaParts p;
    p.alphabet = alphabet;
    p.n_states = 1;
    p.initial = {c};
    p.final = {Rational(1)};
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
        p.transitions.push_back(Matrix::identity(1));
    }
    return Wfa(std::move(p));
}

} // namespace wfa

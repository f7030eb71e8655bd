#include "wfa/casestudy.hpp"

#include <algorithm>
#include <stdexcept>

#include "wfa/random.hpp"

namespace wfa {

namespace {

constexpr Symbol kOpen = 10;
constexpr Symbol kClose = 11;

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(rows.size(), rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int x : row) {
            m(r, c++) = x;
        }
        ++r;
    }
    return m;
}

} // namespace

std::vector<std::string> paren_alphabet() {
    std::vector<std::string> out;
    for (char d = '0'; d <= '9'; ++d) {
        out.emplace_back(1, d);
    }
    out.emplace_back("(");
    out.emplace_back(")");
    return out;
}

Wfa build_paren_spec() {
    const Matrix open = from_rows({
        {0, 0, 1, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
    });
    const Matrix close = from_rows({
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
    });
    const Matrix digit = from_rows({
        {0, 1, 0, 1, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
    });
    WfaParts p;
    p.alphabet = paren_alphabet();
    p.n_states = 8;
    p.initial = {1, 0, 0, 0, 0, 0, 1, 1};
    p.final = {Rational(-1, 2), Rational(-1, 4), 0, Rational(3, 4), 0, 0, Rational(1, 2), Rational(-1, 2)};
    for (int d = 0; d < 10; ++d) {
        p.transitions.push_back(digit);
    }
    p.transitions.push_back(open);
    p.transitions.push_back(close);
    return Wfa(std::move(p));
}

Rational paren_oracle(const Word& word) {
    long depth = 0;
    long deepest = 0;
    for (Symbol s : word) {
        if (s == kOpen) {
            deepest = std::max(deepest, ++depth);
        } else if (s == kClose) {
            if (--depth < 0) {
                return 0;
            }
        } else if (s > kClose) {
            throw InvalidWord("symbol index " + std::to_string(s) + " outside the parenthesis alphabet");
        }
    }
    if (depth != 0 || deepest > 2) {
        return 0;
    }
    return Rational(1) - Rational(1, 1L << deepest);
}

std::vector<std::string> generated_alphabet(std::size_t alphabet_size) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < alphabet_size; ++i) {
        out.push_back(alphabet_size <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
    }
    return out;
}

namespace {

Rational dyadic(Rng& rng) { return Rational(static_cast<long>(uniform_below(rng, 513)) - 256, 256); }

/// The power of two p with p * x in (1/2, 1], for x > 0.
Rational power_of_two_scale(const Rational& x) {
    Rational scale(1);
    Rational scaled = x;
    while (scaled > Rational(1)) {
        scale /= 2;
        scaled /= 2;
    }
    while (scaled * 2 <= Rational(1)) {
        scale *= 2;
        scaled *= 2;
    }
    return scale;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

} // namespace

Wfa gen_random_wfa(std::size_t n_states, std::size_t alphabet_size, std::uint64_t seed, const GenOptions& opts) {
    if (n_states < 1 || alphabet_size < 1) {
        throw std::invalid_argument("generated automata need at least one state and one symbol");
    }
    Rng rng(seed);
    const double density =
        opts.profile == WeightProfile::dense ? 1.0 : std::min(1.0, 2.0 / static_cast<double>(n_states));

    WfaParts p;
    p.alphabet = generated_alphabet(alphabet_size);
    p.n_states = n_states;
    for (std::size_t q = 0; q < n_states; ++q) {
        p.initial.push_back(dyadic(rng));
    }
    for (std::size_t q = 0; q < n_states; ++q) {
        p.final.push_back(dyadic(rng));
    }
    for (std::size_t s = 0; s < alphabet_size; ++s) {
        Matrix m(n_states, n_states);
        for (std::size_t r = 0; r < n_states; ++r) {
            for (std::size_t c = 0; c < n_states; ++c) {
                if (uniform01(rng) < density) {
                    m(r, c) = dyadic(rng);
                }
            }
        }
        Rational widest;
        for (std::size_t r = 0; r < n_states; ++r) {
            Rational row_sum;
            for (std::size_t c = 0; c < n_states; ++c) {
                row_sum += abs(m(r, c));
            }
            widest = std::max(widest, row_sum);
        }
        if (!widest.is_zero()) {
            const Rational scale = power_of_two_scale(widest);
            for (std::size_t r = 0; r < n_states; ++r) {
                for (std::size_t c = 0; c < n_states; ++c) {
                    m(r, c) *= scale;
                }
            }
        }
        p.transitions.push_back(std::move(m));
    }

    const Wfa raw(p);
    Rational largest;
    for (std::size_t n = 0; n < opts.sample_words; ++n) {
        const Word w = random_word(rng, alphabet_size, opts.sample_max_length);
        largest = std::max(largest, abs(eval_weight(raw, w)));
    }
    if (largest.is_zero()) {
        return raw;
    }
    const Rational scale = power_of_two_scale(largest);
    for (auto& x : p.final) {
        x *= scale;
    }
    return Wfa(std::move(p));
}

} // namespace wfa

#include "wfa/core.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace wfa {

namespace {

thread_local std::uint64_t g_multiplications = 0;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) {
            out += "; ";
        }
        out += s;
    }
    return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string canonical_text(const WfaParts& p) {
    std::ostringstream os;
    os << p.n_states << '|';
    for (const auto& s : p.alphabet) {
        os << s.size() << ':' << s << ',';
    }
    auto put = [&os](const Vector& v) {
        os << '[';
        for (const auto& x : v) {
            os << x << ',';
        }
        os << ']';
    };
    put(p.initial);
    put(p.final);
    for (const auto& m : p.transitions) {
        os << '{';
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                os << m(r, c) << ',';
            }
            os << ';';
        }
        os << '}';
    }
    return os.str();
}

} // namespace

InvalidWfa::InvalidWfa(std::vector<std::string> violations)
    : std::invalid_argument("invalid WFA: " + join(violations)), violations_(std::move(violations)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Matrix out(a.rows(), b.cols());
    std::uint64_t mults = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) {
                    out(i, j).add_product(aik, bkj);
                    ++mults;
                }
            }
        }
    }
    instrument::add_multiplications(mults);
    return out;
}

SparseMatrix::SparseMatrix(const Matrix& dense) : rows_(dense.rows()) {
    for (std::size_t r = 0; r < dense.rows(); ++r) {
        for (std::size_t c = 0; c < dense.cols(); ++c) {
            if (!dense(r, c).is_zero()) {
                rows_[r].push_back({static_cast<std::uint32_t>(c), dense(r, c)});
            }
        }
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) {
        n += r.size();
    }
    return n;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(dim(), dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        for (const auto& e : rows_[r]) {
            m(r, e.col) = e.value;
        }
    }
    return m;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    SparseMatrix out;
    out.rows_.resize(dim());
    std::vector<Rational> acc(rhs.dim());
    std::vector<char> touched(rhs.dim(), 0);
    std::uint64_t mults = 0;
    for (std::size_t r = 0; r < dim(); ++r) {
        for (const auto& a : rows_[r]) {
            for (const auto& b : rhs.rows_[a.col]) {
                acc[b.col].add_product(a.value, b.value);
                touched[b.col] = 1;
            }
            mults += rhs.rows_[a.col].size();
        }
        for (std::size_t c = 0; c < acc.size(); ++c) {
            if (!touched[c]) {
                continue;
            }
            if (!acc[c].is_zero()) {
                out.rows_[r].push_back({static_cast<std::uint32_t>(c), acc[c]});
            }
            acc[c].set_zero();
            touched[c] = 0;
        }
    }
    g_multiplications += mults;
    return out;
}

namespace instrument {
std::uint64_t multiplications() { return g_multiplications; }
void reset_multiplications() { g_multiplications = 0; }
void add_multiplications(std::uint64_t n) { g_multiplications += n; }
} // namespace instrument

void vec_mat_into(const Vector& v, const SparseMatrix& m, Vector& out) {
    if (out.size() != m.dim()) {
        out.resize(m.dim());
    }
    for (auto& x : out) {
        x.set_zero();
    }
    std::uint64_t mults = 0;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) {
            continue;
        }
        for (const auto& e : m.row(p)) {
            out[e.col].add_product(v[p], e.value);
        }
        mults += m.row(p).size();
    }
    g_multiplications += mults;
}

Vector vec_mat(const Vector& v, const SparseMatrix& m) {
    Vector out;
    vec_mat_into(v, m, out);
    return out;
}

Rational dot(const Vector& v, const Vector& f) {
    Rational acc;
    std::uint64_t mults = 0;
    for (std::size_t q = 0; q < v.size(); ++q) {
        if (!v[q].is_zero() && !f[q].is_zero()) {
            acc.add_product(v[q], f[q]);
            ++mults;
        }
    }
    g_multiplications += mults;
    return acc;
}

std::vector<std::string> validate(const WfaParts& p) {
    std::vector<std::string> out;
    if (p.n_states == 0) {
        out.emplace_back("state count must be positive");
    }
    if (p.alphabet.empty()) {
        out.emplace_back("alphabet is empty");
    }
    std::set<std::string> seen;
    for (const auto& s : p.alphabet) {
        if (s.empty()) {
            out.emplace_back("empty alphabet symbol name");
        } else if (!seen.insert(s).second) {
            out.push_back("duplicate alphabet symbol '" + s + "'");
        }
    }
    if (p.initial.size() != p.n_states) {
        out.push_back("initial vector has length " + std::to_string(p.initial.size()) + ", expected " +
                      std::to_string(p.n_states));
    }
    if (p.final.size() != p.n_states) {
        out.push_back("final vector has length " + std::to_string(p.final.size()) + ", expected " +
                      std::to_string(p.n_states));
    }
    if (p.transitions.size() != p.alphabet.size()) {
        out.push_back("found " + std::to_string(p.transitions.size()) + " transition matrices for " +
                      std::to_string(p.alphabet.size()) + " alphabet symbols");
    }
    for (std::size_t a = 0; a < p.transitions.size(); ++a) {
        const auto& m = p.transitions[a];
        const std::string name = a < p.alphabet.size() ? p.alphabet[a] : "#" + std::to_string(a);
        const std::string shape = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
        if (m.rows() != m.cols()) {
            out.push_back("transition matrix '" + name + "' not square (" + shape + ")");
        } else if (m.rows() != p.n_states) {
            out.push_back("transition matrix '" + name + "' is " + shape + ", expected " +
                          std::to_string(p.n_states) + "x" + std::to_string(p.n_states));
        }
    }
    return out;
}

Wfa::Wfa(WfaParts parts) : parts_(std::move(parts)) {
    if (auto violations = validate(parts_); !violations.empty()) {
        throw InvalidWfa(std::move(violations));
    }
    sparse_.reserve(parts_.transitions.size());
    for (const auto& m : parts_.transitions) {
        sparse_.emplace_back(m);
    }
    for (Symbol a = 0; a < parts_.alphabet.size(); ++a) {
        index_.emplace(parts_.alphabet[a], a);
        if (parts_.alphabet[a].size() != 1 || parts_.alphabet[a] == " ") {
            compact_ = false;
        }
    }
    fingerprint_ = fnv1a(canonical_text(parts_));
}

std::optional<Symbol> Wfa::symbol_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void check_word(const Wfa& wfa, const Word& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= wfa.alphabet_size()) {
            throw InvalidWord("symbol index " + std::to_string(word[i]) + " at position " + std::to_string(i) +
                              " out of range for alphabet of size " + std::to_string(wfa.alphabet_size()));
        }
    }
}

Word parse_word(const Wfa& wfa, std::string_view text) {
    Word word;
    auto take = [&](std::string_view token) {
        auto idx = wfa.symbol_index(token);
        if (!idx) {
            throw InvalidWord("unknown symbol '" + std::string(token) + "'");
        }
        word.push_back(*idx);
    };
    if (wfa.compact_symbols()) {
        for (char c : text) {
            if (c == ' ') {
                continue;
            }
            take(std::string_view(&c, 1));
        }
        return word;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') {
            ++pos;
        }
        const std::size_t end = std::min(text.find(' ', pos), text.size());
        if (end > pos) {
            take(text.substr(pos, end - pos));
        }
        pos = end;
    }
    return word;
}

std::string format_word(const std::vector<std::string>& alphabet, const Word& word) {
    bool compact = true;
    for (const auto& s : alphabet) {
        compact = compact && s.size() == 1 && s != " ";
    }
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) {
            out += ' ';
        }
        out += alphabet.at(word[i]);
    }
    return out;
}

std::string format_word(const Wfa& wfa, const Word& word) { return format_word(wfa.alphabet(), word); }

Rational eval_weight(const Wfa& wfa, const Word& word) {
    check_word(wfa, word);
    Vector v = wfa.initial_weights();
    Vector next;
    for (Symbol a : word) {
        vec_mat_into(v, wfa.sparse_transition(a), next);
        v.swap(next);
    }
    return dot(v, wfa.final_weights());
}

namespace {

void extend_paths(const Wfa& wfa, const Word& word, std::size_t depth, Path& current,
                  std::vector<Path>& out) {
    const std::size_t q = current.empty() ? 0 : current.back().dest;
    if (depth == word.size()) {
        if (!wfa.final_weights()[q].is_zero()) {
            out.push_back(current);
        }
        return;
    }
    const Matrix& m = wfa.transition(word[depth]);
    for (std::size_t next = 0; next < wfa.n_states(); ++next) {
        if (m(q, next).is_zero()) {
            continue;
        }
        current.push_back({q, word[depth], next});
        extend_paths(wfa, word, depth + 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Path> accepting_paths(const Wfa& wfa, const Word& word) {
    check_word(wfa, word);
    std::vector<Path> out;
    if (word.empty()) {
        return out;
    }
    for (std::size_t q0 = 0; q0 < wfa.n_states(); ++q0) {
        if (wfa.initial_weights()[q0].is_zero()) {
            continue;
        }
        const Matrix& m = wfa.transition(word[0]);
        for (std::size_t q1 = 0; q1 < wfa.n_states(); ++q1) {
            if (m(q0, q1).is_zero()) {
                continue;
            }
            Path current{{q0, word[0], q1}};
            extend_paths(wfa, word, 1, current, out);
        }
    }
    return out;
}

Rational eval_weight_paths(const Wfa& wfa, const Word& word) {
    check_word(wfa, word);
    if (word.empty()) {
        Rational acc;
        for (std::size_t q = 0; q < wfa.n_states(); ++q) {
            acc += wfa.initial_weights()[q] * wfa.final_weights()[q];
        }
        return acc;
    }
    Rational total;
    for (const Path& path : accepting_paths(wfa, word)) {
        Rational w = wfa.initial_weights()[path.front().source];
        for (const Transition& t : path) {
            w *= wfa.transition(t.symbol)(t.source, t.dest);
        }
        w *= wfa.final_weights()[path.back().dest];
        total += w;
    }
    return total;
}

bool is_probabilistic(const Wfa& wfa) {
    const Rational one(1);
    std::size_t unit_initial = 0;
    for (const auto& x : wfa.initial_weights()) {
        if (x == one) {
            ++unit_initial;
        } else if (!x.is_zero()) {
            return false;
        }
    }
    if (unit_initial != 1) {
        return false;
    }
    for (const auto& x : wfa.final_weights()) {
        if (!x.is_zero() && x != one) {
            return false;
        }
    }
    for (Symbol a = 0; a < wfa.alphabet_size(); ++a) {
        const Matrix& m = wfa.transition(a);
        for (std::size_t q = 0; q < wfa.n_states(); ++q) {
            Rational row;
            for (std::size_t r = 0; r < wfa.n_states(); ++r) {
                row += m(q, r);
            }
            if (row != one) {
                return false;
            }
        }
    }
    return true;
}

} // namespace wfa

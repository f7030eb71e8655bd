#include "wfa/rational.hpp"

#include <cctype>
#include <ostream>

namespace wfa {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw RationalParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) {
        throw RationalParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        n = -n;
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_decimal(int places) const {
    if (places < 0) {
        places = 0;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    const mpz_class num = abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class scaled = (2 * num + den) / (2 * den);
    std::string digits = scaled.get_str(10);
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places)) {
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    const bool negative = sgn(value_) < 0 && scaled != 0;
    return negative ? "-" + digits : digits;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= rhs.value_;
    return *this;
}

std::size_t Rational::hash() const {
    // FNV-1a over the limbs of numerator and denominator.
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](const mpz_class& z) {
        const std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
            h *= 1099511628211ULL;
        }
        h ^= static_cast<std::size_t>(sgn(z) + 2);
        h *= 1099511628211ULL;
    };
    mix(value_.get_num());
    mix(value_.get_den());
    return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

} // namespace wfa

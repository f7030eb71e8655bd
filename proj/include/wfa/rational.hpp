#pragma once

/// @file rational.hpp
/// @brief Exact arbitrary-precision rational numbers backed by GMP.
///
/// Every weight in the toolkit is a Rational. Values are kept in canonical
/// form (positive denominator, numerator and denominator coprime) after
/// construction and after every arithmetic operation, so equality is
/// structural and hashing is well defined.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wfa {

class RationalParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                         // NOLINT(implicit)
    Rational(int value) : value_(static_cast<long>(value)) {}       // NOLINT(implicit)
    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses `-?digits(/digits)?`. Non-canonical input such as "2/4" is
    /// accepted and canonicalized; a zero denominator is rejected.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    /// Fixed-point rendering rounded half away from zero. Display only.
    [[nodiscard]] std::string to_decimal(int places = 4) const;

    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    void set_zero() { mpq_set_ui(value_.get_mpq_t(), 0, 1); }

    /// this += a * b without intermediate Rational temporaries.
    void add_product(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// a^e for e >= 0.
Rational pow(const Rational& base, unsigned exponent);

} // namespace wfa

template <>
struct std::hash<wfa::Rational> {
    std::size_t operator()(const wfa::Rational& r) const noexcept { return r.hash(); }
};

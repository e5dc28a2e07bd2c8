#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace repdet {

using Integer = mpz_class;

/// Canonical rational number over arbitrary-precision integers.
///
/// The denominator is always positive, numerator and denominator are coprime
/// and zero is stored as 0/1. Text form is "p/q", or "p" when q = 1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Rational(const Integer& v) : value_(v) {}

    /// Canonical num/den. Throws ZeroDenominator when den == 0.
    static Rational normalize(const Integer& num, const Integer& den);

    /// Parses "p", "-p", "p/q". Non-canonical input is reduced.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const mpq_class& value() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

/// Multiplicative inverse; throws DivisionByZero on zero.
Rational inverse(const Rational& r);

/// a^e for e >= 0.
Rational pow(const Rational& a, unsigned e);

}  // namespace repdet

#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "repdet/rational.hpp"

namespace repdet {

/// Deterministic Miller-Rabin, exact on the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// Largest modulus accepted by Fp; keeps a + b below 2^64.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

/// Element of Z/pZ for a prime p fixed per value.
///
/// A value built from a plain integer (as Eigen does with Scalar(0) and
/// Scalar(1)) is an unbound literal with modulus 0. It takes the modulus of
/// the first bound operand it meets. Two bound operands must share p.
class Fp {
public:
    Fp() = default;

    template <std::signed_integral I>
    Fp(I literal) : literal_(static_cast<std::int64_t>(literal)) {}  // NOLINT(google-explicit-constructor)

    /// Residue `r mod p` of a signed integer. p must be prime.
    static Fp from_signed(std::int64_t r, std::uint64_t p);
    static Fp from_integer(const Integer& r, std::uint64_t p);
    /// Residue already in [0, p). No primality check.
    static Fp from_residue(std::uint64_t r, std::uint64_t p);

    [[nodiscard]] bool is_bound() const { return modulus_ != 0; }
    [[nodiscard]] std::uint64_t modulus() const { return modulus_; }
    /// Residue in [0, p); throws FieldMismatch on an unbound literal.
    [[nodiscard]] std::uint64_t residue() const;
    [[nodiscard]] std::int64_t literal() const { return literal_; }
    [[nodiscard]] bool is_zero() const { return is_bound() ? residue_ == 0 : literal_ == 0; }
    [[nodiscard]] std::string to_string() const;

    /// Same value bound to p.
    [[nodiscard]] Fp bound_to(std::uint64_t p) const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp{} - a; }

    friend bool operator==(const Fp& a, const Fp& b);

    friend std::ostream& operator<<(std::ostream& os, const Fp& a);

private:
    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 0;
    std::int64_t literal_ = 0;
};

Fp inverse(const Fp& a);
Fp pow(const Fp& a, std::uint64_t e);

/// r.numerator * r.denominator^{-1} mod p. Throws BadReduction when p | den.
Fp project_mod_p(const Rational& r, std::uint64_t p);

/// Uniform random prime in [2^(bits-1), 2^bits). bits in [3, 63].
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits = 62);

}  // namespace repdet

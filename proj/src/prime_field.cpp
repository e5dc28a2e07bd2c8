#include "repdet/prime_field.hpp"

#include <array>
#include <ostream>

#include "repdet/errors.hpp"

namespace repdet {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1U) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % p;
    // -(v+1) avoids overflow on INT64_MIN
    const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    const std::uint64_t r = mag % p;
    return r == 0 ? 0 : p - r;
}

void require_modulus(std::uint64_t p) {
    if (p < 2 || p >= kMaxModulus) throw NotPrime("modulus out of range: " + std::to_string(p));
    thread_local std::uint64_t last_checked = 0;
    if (p == last_checked) return;
    if (!is_prime(p)) throw NotPrime("modulus is not prime: " + std::to_string(p));
    last_checked = p;
}

/// Common modulus of two operands, 0 when both are unbound literals.
std::uint64_t common_modulus(const Fp& a, const Fp& b) {
    if (a.is_bound() && b.is_bound() && a.modulus() != b.modulus()) {
        throw FieldMismatch("operands live in different prime fields (" + std::to_string(a.modulus()) +
                            " vs " + std::to_string(b.modulus()) + ")");
    }
    return a.is_bound() ? a.modulus() : b.modulus();
}

void check_overflow(bool overflow) {
    if (overflow) throw FieldMismatch("unbound prime-field literal overflow");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp Fp::from_signed(std::int64_t r, std::uint64_t p) {
    require_modulus(p);
    return from_residue(reduce_signed(r, p), p);
}

Fp Fp::from_integer(const Integer& r, std::uint64_t p) {
    require_modulus(p);
    static_assert(sizeof(unsigned long) == 8);
    return from_residue(mpz_fdiv_ui(r.get_mpz_t(), p), p);
}

Fp Fp::from_residue(std::uint64_t r, std::uint64_t p) {
    if (p < 2 || p >= kMaxModulus || r >= p) throw NotPrime("residue/modulus out of range");
    Fp out;
    out.residue_ = r;
    out.modulus_ = p;
    return out;
}

std::uint64_t Fp::residue() const {
    if (!is_bound()) throw FieldMismatch("unbound literal has no residue");
    return residue_;
}

std::string Fp::to_string() const {
    return is_bound() ? std::to_string(residue_) : std::to_string(literal_);
}

Fp Fp::bound_to(std::uint64_t p) const {
    if (is_bound()) {
        if (modulus_ != p) throw FieldMismatch("value already bound to another modulus");
        return *this;
    }
    return from_residue(reduce_signed(literal_, p), p);
}

Fp& Fp::operator+=(const Fp& o) {
    const std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        std::int64_t v = 0;
        check_overflow(__builtin_add_overflow(literal_, o.literal_, &v));
        literal_ = v;
        return *this;
    }
    const std::uint64_t a = bound_to(p).residue_;
    const std::uint64_t b = o.bound_to(p).residue_;
    const std::uint64_t s = a + b;
    *this = from_residue(s >= p ? s - p : s, p);
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    const std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        std::int64_t v = 0;
        check_overflow(__builtin_sub_overflow(literal_, o.literal_, &v));
        literal_ = v;
        return *this;
    }
    const std::uint64_t a = bound_to(p).residue_;
    const std::uint64_t b = o.bound_to(p).residue_;
    *this = from_residue(a >= b ? a - b : a + (p - b), p);
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    const std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        std::int64_t v = 0;
        check_overflow(__builtin_mul_overflow(literal_, o.literal_, &v));
        literal_ = v;
        return *this;
    }
    *this = from_residue(mul_mod(bound_to(p).residue_, o.bound_to(p).residue_, p), p);
    return *this;
}

Fp& Fp::operator/=(const Fp& o) {
    if (o.is_zero()) throw DivisionByZero("prime-field division by zero");
    const std::uint64_t p = common_modulus(*this, o);
    if (p == 0) {
        if (literal_ % o.literal_ != 0) throw FieldMismatch("inexact division of unbound literals");
        literal_ /= o.literal_;
        return *this;
    }
    return *this *= inverse(o.bound_to(p));
}

bool operator==(const Fp& a, const Fp& b) {
    const std::uint64_t p = common_modulus(a, b);
    if (p == 0) return a.literal_ == b.literal_;
    return a.bound_to(p).residue_ == b.bound_to(p).residue_;
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }

Fp inverse(const Fp& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in prime field");
    if (!a.is_bound()) {
        if (a.literal() == 1 || a.literal() == -1) return a;
        throw FieldMismatch("inverse of unbound literal");
    }
    // Fermat: a^(p-2)
    return Fp::from_residue(pow_mod(a.residue(), a.modulus() - 2, a.modulus()), a.modulus());
}

Fp pow(const Fp& a, std::uint64_t e) {
    if (!a.is_bound()) {
        Fp r(1);
        for (std::uint64_t i = 0; i < e; ++i) r *= a;
        return r;
    }
    return Fp::from_residue(pow_mod(a.residue(), e, a.modulus()), a.modulus());
}

Fp project_mod_p(const Rational& r, std::uint64_t p) {
    const Fp den = Fp::from_integer(r.denominator(), p);
    if (den.is_zero()) {
        throw BadReduction("prime " + std::to_string(p) + " divides denominator of " + r.to_string());
    }
    return Fp::from_integer(r.numerator(), p) / den;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
    if (bits < 3 || bits > 63) throw NotPrime("prime bit length must be in [3, 63]");
    const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
    const std::uint64_t span_mask = lo - 1;
    for (;;) {
        const std::uint64_t candidate = lo | (rng() & span_mask) | 1U;
        if (is_prime(candidate)) return candidate;
    }
}

}  // namespace repdet

#pragma once

#include <concepts>
#include <string>

#include "repdet/prime_field.hpp"
#include "repdet/rational.hpp"

namespace repdet {

/// Exact fields the identity checks run over.
template <typename S>
concept ExactField = std::same_as<S, Rational> || std::same_as<S, Fp>;

/// Exact rings accepted by the division-free code paths.
template <typename S>
concept ExactRing = ExactField<S> || std::same_as<S, Integer>;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const Fp& x) { return x.to_string(); }

/// (-1)^e as a scalar.
template <ExactRing S>
S sign_power(long long e) {
    return (e % 2 == 0) ? S(1) : S(-1);
}

template <ExactRing S>
S ipow(const S& base, unsigned e) {
    S result(1);
    for (unsigned i = 0; i < e; ++i) result = result * base;
    return result;
}

}  // namespace repdet

#pragma once

#include <cstdint>
#include <random>

#include "repdet/matrix.hpp"
#include "repdet/symmetric.hpp"

namespace repdet {

/// Rejection budget for instance generation.
inline constexpr int kGenerationAttempts = 10'000;

/// Independent child seed for trial `index` (splitmix64 of master + index).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [lo, hi] that does not depend on the standard
/// library's distribution implementation.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Conversion from a drawn integer to the target scalar.
template <ExactField S>
struct ScalarFactory {
    std::uint64_t prime = 0;  // 0 for rationals
    S operator()(std::int64_t v) const {
        if constexpr (std::same_as<S, Fp>) {
            return Fp::from_signed(v, prime);
        } else {
            return S(v);
        }
    }
};

/// Rejection-sampled system with integer parameters in [-range, range].
/// Throws GenerationFailed after kGenerationAttempts invalid draws.
template <ExactField S>
SextupleSystem<S> random_system(Index n, std::mt19937_64& rng, std::int64_t range, ScalarFactory<S> make = {}) {
    for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
        std::vector<LeftTriplet<S>> left;
        std::vector<RightTriplet<S>> right;
        for (Index i = 0; i <= n; ++i) {
            const auto u = uniform_int(rng, -range, range), v = uniform_int(rng, -range, range);
            const auto k = uniform_int(rng, -range, range);
            left.push_back({make(u), make(v), make(k)});
        }
        for (Index j = 0; j <= n; ++j) {
            const auto x = uniform_int(rng, -range, range), y = uniform_int(rng, -range, range);
            const auto l = uniform_int(rng, -range, range);
            right.push_back({make(x), make(y), make(l)});
        }
        try {
            return {std::move(left), std::move(right)};
        } catch (const InvalidSystem&) {
        }
    }
    throw GenerationFailed("no valid general system of order " + std::to_string(n) + " in range " +
                           std::to_string(range) + " after " + std::to_string(kGenerationAttempts) + " attempts");
}

template <ExactField S>
SymmetricSystem<S> random_symmetric_system(Index n, std::mt19937_64& rng, std::int64_t range,
                                           ScalarFactory<S> make = {}) {
    for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
        std::vector<LeftTriplet<S>> t;
        for (Index i = 0; i <= n; ++i) {
            const auto u = uniform_int(rng, -range, range), v = uniform_int(rng, -range, range);
            const auto k = uniform_int(rng, -range, range);
            t.push_back({make(u), make(v), make(k)});
        }
        try {
            return SymmetricSystem<S>(std::move(t));
        } catch (const InvalidSystem&) {
        }
    }
    throw GenerationFailed("no valid symmetric system of order " + std::to_string(n) + " in range " +
                           std::to_string(range) + " after " + std::to_string(kGenerationAttempts) + " attempts");
}

DenseMatrix<Integer> random_integer_matrix(Index rows, Index cols, std::mt19937_64& rng, std::int64_t range);

/// Entries p/q with p in [-range, range], q in [1, max_den].
DenseMatrix<Rational> random_rational_matrix(Index rows, Index cols, std::mt19937_64& rng, std::int64_t range,
                                             std::int64_t max_den);

/// Random integer matrix of rank at most `rank` (product of two thin factors).
DenseMatrix<Integer> random_low_rank_matrix(Index size, Index rank, std::mt19937_64& rng, std::int64_t range);

}  // namespace repdet

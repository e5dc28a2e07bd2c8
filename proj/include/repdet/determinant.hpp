#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "repdet/matrix.hpp"

namespace repdet {

/// Largest size det_laplace accepts.
inline constexpr Index kLaplaceMaxSize = 9;

/// Denominators at most this many bits are cleared before Bareiss.
inline constexpr std::size_t kClearDenominatorBits = 64;

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
    }
}

}  // namespace detail

/// Cofactor expansion along the top row of every sub-minor, memoised over
/// column subsets. Works over any exact ring and never divides; used as the
/// oracle for the elimination engines.
template <ExactRing S>
S det_laplace(const DenseMatrix<S>& m) {
    detail::require_square(m);
    const Index n = m.rows();
    if (n > kLaplaceMaxSize) throw SizeGuard("det_laplace limited to " + std::to_string(kLaplaceMaxSize) + " rows");
    if (n == 0) return S(1);

    // minors[mask] = det of the bottom popcount(mask) rows restricted to mask's columns
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<S> minors(full + 1, S(0));
    minors[0] = S(1);
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const Index row = n - std::popcount(mask);
        S acc(0);
        int position = 0;  // rank of column c inside mask
        for (Index c = 0; c < n; ++c) {
            const std::size_t bit = std::size_t{1} << c;
            if ((mask & bit) == 0) continue;
            if (!is_zero(m(row, c))) {
                const S term = m(row, c) * minors[mask & ~bit];
                if (position % 2 == 0) {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            ++position;
        }
        minors[mask] = acc;
    }
    return minors[full];
}

/// Gaussian elimination over a field with first-nonzero pivoting.
template <ExactField S>
S det_field_elimination(DenseMatrix<S> a) {
    detail::require_square(a);
    const Index n = a.rows();
    S det(1);
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        while (pivot < n && is_zero(a(pivot, k))) ++pivot;
        if (pivot == n) return S(0);
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            det = -det;
        }
        det = det * a(k, k);
        const S inv = inverse(a(k, k));
        for (Index i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) continue;
            const S factor = a(i, k) * inv;
            for (Index j = k + 1; j < n; ++j) a(i, j) = a(i, j) - factor * a(k, j);
        }
    }
    return det;
}

/// Fraction-free (Bareiss) elimination; every division is exact.
Integer det_bareiss(DenseMatrix<Integer> a);

/// Exact determinant of an integer matrix (Bareiss).
Integer det_exact(const DenseMatrix<Integer>& m);

/// Exact determinant of a rational matrix. Rows are cleared to integers and
/// fed to Bareiss when every denominator fits in 64 bits, otherwise plain
/// field elimination.
Rational det_exact(const DenseMatrix<Rational>& m);

/// Exact determinant over Z/pZ.
Fp det_exact(const DenseMatrix<Fp>& m);

/// Upper bound on |det m|: product of per-row ceil(Euclidean norm).
Integer hadamard_bound(const DenseMatrix<Integer>& m);

/// Determinant modulo a single prime on raw 64-bit residues.
std::uint64_t det_mod_prime(const DenseMatrix<Integer>& m, std::uint64_t p);

/// Integer determinant by per-prime elimination and Chinese remaindering.
/// Primes are drawn from `seed` until their product exceeds twice the
/// Hadamard bound; a repeated prime is resampled.
Integer det_multimodular(const DenseMatrix<Integer>& m, std::uint64_t seed = 0x5eedULL);

}  // namespace repdet

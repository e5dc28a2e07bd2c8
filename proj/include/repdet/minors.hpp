#pragma once

// Bordered-minor identities over any exact ring:
//
//   jacobi       det(M) * D = M_{r1 c1} M_{r2 c2} - M_{r1 c2} M_{r2 c1}
//   sylvester    det(g_ij) = F^{k-1} det(M), g_ij = F bordered by row i, col j
//   adjugate     K = F det(M)^{k-1}, K the leading k x k minor of adj(M)
//
// Minors here are plain minors (no cofactor sign). Everything is polynomial,
// so all three hold for singular matrices too.

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "repdet/determinant.hpp"
#include "repdet/report.hpp"

namespace repdet {

template <ExactRing S>
struct IdentitySides {
    S lhs;
    S rhs;
};

namespace detail {

template <ExactRing S>
void require_bordering(const DenseMatrix<S>& m, Index kdim) {
    if (m.rows() != m.cols()) throw ShapeError("bordered identity needs a square matrix");
    if (kdim < 2 || kdim >= m.rows()) {
        throw SizeError("bordering dimension must satisfy 2 <= k < n (k=" + std::to_string(kdim) +
                        ", n=" + std::to_string(m.rows()) + ")");
    }
}

/// Determinant of the lower-right (n - k) x (n - k) block.
template <ExactRing S>
S corner_minor(const DenseMatrix<S>& m, Index kdim) {
    const Index rest = m.rows() - kdim;
    return det_exact(DenseMatrix<S>(m.bottomRightCorner(rest, rest)));
}

}  // namespace detail

/// Both sides of the two-row/two-column Jacobi identity. Row and column pairs
/// are read as sets (sorted before use). Requires n >= 3.
template <ExactRing S>
IdentitySides<S> jacobi_sides(const DenseMatrix<S>& m, std::array<Index, 2> rows, std::array<Index, 2> cols) {
    if (m.rows() != m.cols()) throw ShapeError("jacobi_check needs a square matrix");
    if (m.rows() < 3) throw SizeError("jacobi_check needs n >= 3");
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    if (rows[0] == rows[1] || cols[0] == cols[1]) throw IndexError("jacobi_check needs two distinct rows and columns");
    for (Index i : {rows[0], rows[1], cols[0], cols[1]}) {
        if (i < 0 || i >= m.rows()) throw IndexError("jacobi_check index out of range");
    }
    const S e = det_exact(m);
    const S d = det_exact(minor_matrix(m, MinorSpec{{rows[0], rows[1]}, {cols[0], cols[1]}}));
    const S m11 = det_exact(minor_matrix(m, rows[0], cols[0]));
    const S m22 = det_exact(minor_matrix(m, rows[1], cols[1]));
    const S m12 = det_exact(minor_matrix(m, rows[0], cols[1]));
    const S m21 = det_exact(minor_matrix(m, rows[1], cols[0]));
    return {e * d, m11 * m22 - m12 * m21};
}

template <ExactRing S>
VerificationReport jacobi_check(const DenseMatrix<S>& m, std::array<Index, 2> rows, std::array<Index, 2> cols) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto sides = jacobi_sides(m, rows, cols);
    report.check("jacobi", sides.lhs, sides.rhs);
    return report;
}

/// det(g) and F^{k-1} det(M) for the leading k rows/columns bordered onto the
/// lower-right (n - k) block.
template <ExactRing S>
IdentitySides<S> sylvester_sides(const DenseMatrix<S>& m, Index kdim) {
    detail::require_bordering(m, kdim);
    const Index n = m.rows();
    const S f = detail::corner_minor(m, kdim);

    std::vector<Index> tail;
    for (Index q = kdim; q < n; ++q) tail.push_back(q);

    DenseMatrix<S> g(kdim, kdim);
    for (Index i = 0; i < kdim; ++i) {
        for (Index j = 0; j < kdim; ++j) {
            std::vector<Index> rows{i};
            std::vector<Index> cols{j};
            rows.insert(rows.end(), tail.begin(), tail.end());
            cols.insert(cols.end(), tail.begin(), tail.end());
            g(i, j) = det_exact(DenseMatrix<S>(m(rows, cols)));
        }
    }
    return {det_exact(g), ipow(f, static_cast<unsigned>(kdim - 1)) * det_exact(m)};
}

template <ExactRing S>
VerificationReport sylvester_bordered(const DenseMatrix<S>& m, Index kdim) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto sides = sylvester_sides(m, kdim);
    report.check("sylvester_k" + std::to_string(kdim), sides.lhs, sides.rhs);
    return report;
}

/// Classical adjugate: transpose of the signed cofactor matrix.
template <ExactRing S>
DenseMatrix<S> adjugate(const DenseMatrix<S>& m) {
    if (m.rows() != m.cols()) throw ShapeError("adjugate needs a square matrix");
    const Index n = m.rows();
    DenseMatrix<S> adj(n, n);
    if (n == 1) {
        adj(0, 0) = S(1);
        return adj;
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            const S c = det_exact(minor_matrix(m, i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : S(-c);
        }
    }
    return adj;
}

/// K (leading k x k minor of the adjugate) and F det(M)^{k-1}.
template <ExactRing S>
IdentitySides<S> adjugate_minor_sides(const DenseMatrix<S>& m, Index kdim) {
    detail::require_bordering(m, kdim);
    const DenseMatrix<S> adj = adjugate(m);
    const S k = det_exact(DenseMatrix<S>(adj.topLeftCorner(kdim, kdim)));
    const S f = detail::corner_minor(m, kdim);
    return {k, f * ipow(det_exact(m), static_cast<unsigned>(kdim - 1))};
}

template <ExactRing S>
VerificationReport adjugate_minor_check(const DenseMatrix<S>& m, Index kdim) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto sides = adjugate_minor_sides(m, kdim);
    report.check("adjugate_k" + std::to_string(kdim), sides.lhs, sides.rhs);
    return report;
}

}  // namespace repdet

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

#include "repdet/eigen_support.hpp"
#include "repdet/errors.hpp"
#include "repdet/scalar.hpp"

namespace repdet {

using Index = Eigen::Index;

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Rows and columns to delete. Both lists strictly increasing, 0-based.
struct MinorSpec {
    std::vector<Index> deleted_rows;
    std::vector<Index> deleted_cols;
};

namespace detail {

inline std::vector<Index> kept_indices(Index extent, const std::vector<Index>& deleted, const char* what) {
    for (std::size_t i = 0; i < deleted.size(); ++i) {
        if (deleted[i] < 0 || deleted[i] >= extent) {
            throw IndexError(std::string(what) + " index " + std::to_string(deleted[i]) + " out of range [0, " +
                             std::to_string(extent) + ")");
        }
        if (i > 0 && deleted[i] <= deleted[i - 1]) {
            throw IndexError(std::string(what) + " indices must be strictly increasing");
        }
    }
    std::vector<Index> kept;
    kept.reserve(static_cast<std::size_t>(extent) - deleted.size());
    for (Index i = 0; i < extent; ++i) {
        if (!std::binary_search(deleted.begin(), deleted.end(), i)) kept.push_back(i);
    }
    return kept;
}

}  // namespace detail

/// Submatrix with the listed rows and columns removed, order preserved.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m, const MinorSpec& spec) {
    const auto rows = detail::kept_indices(m.rows(), spec.deleted_rows, "row");
    const auto cols = detail::kept_indices(m.cols(), spec.deleted_cols, "column");
    return m(rows, cols);
}

/// Single row/column deletion.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m, Index row, Index col) {
    return minor_matrix(m, MinorSpec{{row}, {col}});
}

/// Row-major literal, mainly for tests: from_rows<Rational>({{1, 2}, {3, 4}}).
template <typename S>
DenseMatrix<S> from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    DenseMatrix<S> m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c) throw ShapeError("ragged row list");
        Index j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

/// Entry-wise image in Z/pZ. Throws BadReduction if p divides a denominator.
inline DenseMatrix<Fp> project_mod_p(const DenseMatrix<Rational>& m, std::uint64_t p) {
    return m.unaryExpr([p](const Rational& r) { return project_mod_p(r, p); });
}

inline DenseMatrix<Fp> project_mod_p(const DenseMatrix<Integer>& m, std::uint64_t p) {
    return m.unaryExpr([p](const Integer& r) { return Fp::from_integer(r, p); });
}

inline DenseMatrix<Rational> to_rational(const DenseMatrix<Integer>& m) {
    return m.unaryExpr([](const Integer& v) { return Rational(v); });
}

/// Common modulus of a prime-field matrix, 0 when every entry is an unbound
/// literal. Throws FieldMismatch when two entries disagree.
inline std::uint64_t field_modulus(const DenseMatrix<Fp>& m) {
    std::uint64_t p = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            const std::uint64_t q = m(i, j).modulus();
            if (q == 0) continue;
            if (p != 0 && q != p) throw FieldMismatch("matrix mixes prime fields");
            p = q;
        }
    }
    return p;
}

/// Row-wise denominator clearing: det(m) = det(result.matrix) / result.scale.
struct ClearedMatrix {
    DenseMatrix<Integer> matrix;
    Integer scale;
};

inline ClearedMatrix clear_denominators(const DenseMatrix<Rational>& m) {
    ClearedMatrix out{DenseMatrix<Integer>(m.rows(), m.cols()), Integer(1)};
    for (Index i = 0; i < m.rows(); ++i) {
        Integer row_lcm = 1;
        for (Index j = 0; j < m.cols(); ++j) {
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).value().get_den_mpz_t());
        }
        for (Index j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).value();
            out.matrix(i, j) = q.get_num() * (row_lcm / q.get_den());
        }
        out.scale *= row_lcm;
    }
    return out;
}

}  // namespace repdet

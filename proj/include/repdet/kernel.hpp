#pragma once

// Kernel matrices with entries (y_j u_i - x_j v_i) / (l_j - k_i), the four
// bordered determinants of the leading n x n kernel, and the division-free
// reproducing identity
//
//     D_{n+1} * D_n * (l - k) = Y U - X V
//
// where (u, v, k; x, y, l) is the last ("distinguished") sextuple.
// All indices are 0-based; the distinguished pair has index n.

#include <cstdint>
#include <utility>
#include <vector>

#include "repdet/determinant.hpp"
#include "repdet/report.hpp"

namespace repdet {

template <ExactField S>
struct LeftTriplet {
    S u, v, k;
    friend bool operator==(const LeftTriplet&, const LeftTriplet&) = default;
};

template <ExactField S>
struct RightTriplet {
    S x, y, l;
    friend bool operator==(const RightTriplet&, const RightTriplet&) = default;
};

/// n + 1 left triplets (u_i, v_i, k_i) and n + 1 right triplets (x_j, y_j, l_j).
///
/// Construction enforces: both sides have the same non-zero length, the k_i
/// are pairwise distinct, the l_j are pairwise distinct and l_j != k_i.
template <ExactField S>
class SextupleSystem {
public:
    using Scalar = S;

    SextupleSystem(std::vector<LeftTriplet<S>> left, std::vector<RightTriplet<S>> right)
        : left_(std::move(left)), right_(std::move(right)) {
        validate();
    }

    [[nodiscard]] Index n() const { return static_cast<Index>(left_.size()) - 1; }
    [[nodiscard]] Index size() const { return static_cast<Index>(left_.size()); }
    [[nodiscard]] const std::vector<LeftTriplet<S>>& left() const { return left_; }
    [[nodiscard]] const std::vector<RightTriplet<S>>& right() const { return right_; }
    [[nodiscard]] const LeftTriplet<S>& left(Index i) const { return left_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const RightTriplet<S>& right(Index j) const { return right_[static_cast<std::size_t>(j)]; }

    /// Same system with the distinguished left triplet replaced.
    [[nodiscard]] SextupleSystem with_last_left(const LeftTriplet<S>& t) const {
        auto l = left_;
        l.back() = t;
        return {std::move(l), right_};
    }

    /// Same system with the distinguished right triplet replaced.
    [[nodiscard]] SextupleSystem with_last_right(const RightTriplet<S>& t) const {
        auto r = right_;
        r.back() = t;
        return {left_, std::move(r)};
    }

    /// The first m + 1 pairs, as a system of order m.
    [[nodiscard]] SextupleSystem leading(Index m) const {
        if (m < 0 || m > n()) throw SizeError("leading system order out of range");
        return {std::vector<LeftTriplet<S>>(left_.begin(), left_.begin() + m + 1),
                std::vector<RightTriplet<S>>(right_.begin(), right_.begin() + m + 1)};
    }

    friend bool operator==(const SextupleSystem&, const SextupleSystem&) = default;

private:
    void validate() const {
        if (left_.empty() || left_.size() != right_.size()) {
            throw InvalidSystem("system needs n+1 >= 1 left and right triplets of equal count");
        }
        for (std::size_t i = 0; i < left_.size(); ++i) {
            for (std::size_t j = 0; j < right_.size(); ++j) {
                if (right_[j].l == left_[i].k) {
                    throw InvalidSystem("l_" + std::to_string(j + 1) + " equals k_" + std::to_string(i + 1));
                }
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (left_[i].k == left_[j].k) throw InvalidSystem("duplicate k values");
                if (right_[i].l == right_[j].l) throw InvalidSystem("duplicate l values");
            }
        }
    }

    std::vector<LeftTriplet<S>> left_;
    std::vector<RightTriplet<S>> right_;
};

/// Image of a rational system in Z/pZ. Throws BadReduction when p divides a
/// denominator or the reduced parameters violate the system invariants.
inline SextupleSystem<Fp> project_mod_p(const SextupleSystem<Rational>& sys, std::uint64_t p) {
    std::vector<LeftTriplet<Fp>> left;
    std::vector<RightTriplet<Fp>> right;
    for (const auto& t : sys.left()) left.push_back({project_mod_p(t.u, p), project_mod_p(t.v, p), project_mod_p(t.k, p)});
    for (const auto& t : sys.right()) {
        right.push_back({project_mod_p(t.x, p), project_mod_p(t.y, p), project_mod_p(t.l, p)});
    }
    try {
        return {std::move(left), std::move(right)};
    } catch (const InvalidSystem& e) {
        throw BadReduction(std::string("system degenerates mod ") + std::to_string(p) + ": " + e.what());
    }
}

/// (y_j u_i - x_j v_i) / (l_j - k_i).
template <ExactField S>
S kernel_entry(const SextupleSystem<S>& sys, Index i, Index j) {
    if (i < 0 || j < 0 || i > sys.n() || j > sys.n()) throw IndexError("kernel index out of range");
    const auto& [u, v, k] = sys.left(i);
    const auto& [x, y, l] = sys.right(j);
    const S den = l - k;
    if (is_zero(den)) throw SingularDenominator("l_j - k_i vanishes");
    return (y * u - x * v) / den;
}

namespace detail {

template <ExactField S>
DenseMatrix<S> leading_kernel(const SextupleSystem<S>& sys, Index m) {
    DenseMatrix<S> out(m, m);
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) out(i, j) = kernel_entry(sys, i, j);
    }
    return out;
}

}  // namespace detail

/// m x m kernel over the first m pairs, 0 <= m <= n + 1.
template <ExactField S>
DenseMatrix<S> kernel_matrix(const SextupleSystem<S>& sys, Index m) {
    if (m < 0 || m > sys.n() + 1) throw SizeError("kernel_matrix size must lie in [0, n+1]");
    return detail::leading_kernel(sys, m);
}

enum class Border { u, v, x, y };

/// The (n+1) x (n+1) bordered kernel whose determinant is the raw border.
///
/// U/V: last column (u_i) resp. (v_i), last row (y_j u - x_j v)/(l_j - k),
/// corner u resp. v. X/Y: last column (y u_i - x v_i)/(l - k_i), last row
/// (x_j) resp. (y_j), corner x resp. y.
template <ExactField S>
DenseMatrix<S> border_matrix(const SextupleSystem<S>& sys, Border which) {
    const Index n = sys.n();
    DenseMatrix<S> m(n + 1, n + 1);
    m.topLeftCorner(n, n) = detail::leading_kernel(sys, n);
    const bool left_border = (which == Border::u || which == Border::v);
    for (Index i = 0; i <= n; ++i) {
        if (left_border) {
            const auto& t = sys.left(i);
            m(i, n) = (which == Border::u) ? t.u : t.v;
        } else {
            m(i, n) = (i < n) ? kernel_entry(sys, i, n) : S(0);
        }
    }
    for (Index j = 0; j <= n; ++j) {
        if (left_border) {
            if (j < n) m(n, j) = kernel_entry(sys, n, j);
        } else {
            const auto& t = sys.right(j);
            m(n, j) = (which == Border::x) ? t.x : t.y;
        }
    }
    return m;
}

/// Raw (un-normalised) borders together with D_n and D_{n+1}.
template <ExactField S>
struct BorderSet {
    S u_raw, v_raw, x_raw, y_raw;
    S dn, dn1;
};

template <ExactField S>
BorderSet<S> border_determinants(const SextupleSystem<S>& sys) {
    return {det_exact(border_matrix(sys, Border::u)),
            det_exact(border_matrix(sys, Border::v)),
            det_exact(border_matrix(sys, Border::x)),
            det_exact(border_matrix(sys, Border::y)),
            det_exact(kernel_matrix(sys, sys.n())),
            det_exact(kernel_matrix(sys, sys.n() + 1))};
}

template <ExactField S>
struct NormalizedBorders {
    S u, v, x, y;
};

/// U_n, V_n, X_n, Y_n. Throws DegenerateMinor when D_n = 0.
template <ExactField S>
NormalizedBorders<S> normalized_borders(const BorderSet<S>& b) {
    if (is_zero(b.dn)) throw DegenerateMinor("leading minor D_n vanishes");
    const S inv = inverse(b.dn);
    return {b.u_raw * inv, b.v_raw * inv, b.x_raw * inv, b.y_raw * inv};
}

template <ExactField S>
NormalizedBorders<S> normalized_borders(const SextupleSystem<S>& sys) {
    return normalized_borders(border_determinants(sys));
}

/// D_{n+1} D_n (l - k) = Y U - X V on raw borders. Never throws on failure.
template <ExactField S>
VerificationReport verify_main_theorem(const SextupleSystem<S>& sys) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto b = border_determinants(sys);
    const S gap = sys.right(sys.n()).l - sys.left(sys.n()).k;
    report.check("main_theorem", b.dn1 * b.dn * gap, b.y_raw * b.u_raw - b.x_raw * b.v_raw);
    return report;
}

/// D_{n+1} through the chain D_{m+1} = (Y_m U_m - X_m V_m) / (D_m (l_m - k_m))
/// over the leading systems m = 0..n. Throws DegenerateChain when some
/// leading minor D_1..D_n vanishes.
template <ExactField S>
S det_by_bordering(const SextupleSystem<S>& sys) {
    S d(1);  // D_0
    for (Index m = 0; m <= sys.n(); ++m) {
        const auto lead = sys.leading(m);
        if (is_zero(d)) {
            throw DegenerateChain("leading kernel minor D_" + std::to_string(m) + " vanishes");
        }
        // borders of order m only need the size-(m+1) bordered determinants
        const S u = det_exact(border_matrix(lead, Border::u));
        const S v = det_exact(border_matrix(lead, Border::v));
        const S x = det_exact(border_matrix(lead, Border::x));
        const S y = det_exact(border_matrix(lead, Border::y));
        const S gap = lead.right(m).l - lead.left(m).k;
        d = (y * u - x * v) / (d * gap);
    }
    return d;
}

}  // namespace repdet

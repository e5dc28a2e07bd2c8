#pragma once

// The 2(n+1) x 2(n+1) moment determinant
//
//          | k_c^r u_c   l_c^r x_c |     r = 0..n (u rows, then v rows)
//     E' = |                       |
//          | k_c^r v_c   l_c^r y_c |     c = 0..n (left cols, then right cols)
//
// which equals E = (-1)^{n(n+1)/2} prod_{i,j} (l_j - k_i) D_{n+1}, together
// with its four co-minors at k^n u, k^n v, l^n x, l^n y (named Y, X, V, U)
// and the (2n+1) x (2n+1) displays that express U_n..Y_n.

#include <vector>

#include "repdet/kernel.hpp"
#include "repdet/minors.hpp"

namespace repdet {

/// E' plus the index bookkeeping of its row and column blocks.
template <ExactField S>
struct OkadaLayout {
    DenseMatrix<S> matrix;
    Index n = 0;

    [[nodiscard]] Index u_row(Index power) const { return power; }
    [[nodiscard]] Index v_row(Index power) const { return n + 1 + power; }
    [[nodiscard]] Index left_col(Index c) const { return c; }
    [[nodiscard]] Index right_col(Index c) const { return n + 1 + c; }
};

/// Rows k^r u (r < u_rows) then k^r v (r < v_rows); columns over the listed
/// left triplets then the listed right triplets.
template <ExactField S>
DenseMatrix<S> moment_display(const SextupleSystem<S>& sys, Index u_rows, Index v_rows,
                              const std::vector<Index>& left_cols, const std::vector<Index>& right_cols) {
    const Index cols = static_cast<Index>(left_cols.size() + right_cols.size());
    DenseMatrix<S> m(u_rows + v_rows, cols);
    Index c = 0;
    for (Index i : left_cols) {
        const auto& t = sys.left(i);
        S power(1);
        for (Index r = 0; r < std::max(u_rows, v_rows); ++r) {
            if (r < u_rows) m(r, c) = power * t.u;
            if (r < v_rows) m(u_rows + r, c) = power * t.v;
            power = power * t.k;
        }
        ++c;
    }
    for (Index j : right_cols) {
        const auto& t = sys.right(j);
        S power(1);
        for (Index r = 0; r < std::max(u_rows, v_rows); ++r) {
            if (r < u_rows) m(r, c) = power * t.x;
            if (r < v_rows) m(u_rows + r, c) = power * t.y;
            power = power * t.l;
        }
        ++c;
    }
    return m;
}

namespace detail {

inline std::vector<Index> iota_indices(Index count) {
    std::vector<Index> out(static_cast<std::size_t>(count));
    for (Index i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

/// prod over i in [0, rows), j in [0, cols) of (l_j - k_i).
template <ExactField S>
S gap_product(const SextupleSystem<S>& sys, Index rows, Index cols) {
    S p(1);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) p = p * (sys.right(j).l - sys.left(i).k);
    }
    return p;
}

/// prod_{j<n} (l_j - k), k the distinguished left parameter.
template <ExactField S>
S right_gaps_to_k(const SextupleSystem<S>& sys) {
    const Index n = sys.n();
    S p(1);
    for (Index j = 0; j < n; ++j) p = p * (sys.right(j).l - sys.left(n).k);
    return p;
}

/// prod_{i<n} (l - k_i), l the distinguished right parameter.
template <ExactField S>
S left_gaps_to_l(const SextupleSystem<S>& sys) {
    const Index n = sys.n();
    S p(1);
    for (Index i = 0; i < n; ++i) p = p * (sys.right(n).l - sys.left(i).k);
    return p;
}

inline long long tri_up(Index n) { return static_cast<long long>(n) * (n + 1) / 2; }
inline long long tri_down(Index n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace detail

template <ExactField S>
OkadaLayout<S> okada_matrix(const SextupleSystem<S>& sys) {
    const Index n = sys.n();
    const auto all = detail::iota_indices(n + 1);
    return {moment_display(sys, n + 1, n + 1, all, all), n};
}

/// (-1)^{n(n+1)/2} prod_{i,j <= n+1} (l_j - k_i) D_{n+1}.
template <ExactField S>
S scaled_kernel_det(const SextupleSystem<S>& sys) {
    const Index n = sys.n();
    return sign_power<S>(detail::tri_up(n)) * detail::gap_product(sys, n + 1, n + 1) *
           det_exact(kernel_matrix(sys, n + 1));
}

template <ExactField S>
VerificationReport verify_okada(const SextupleSystem<S>& sys) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    report.check("okada_equivalence", det_exact(okada_matrix(sys).matrix), scaled_kernel_det(sys));
    return report;
}

/// Co-minors of E' (plain minors, no cofactor sign) and the double minor.
template <ExactField S>
struct CominorSet {
    S cal_u;     // at l^n y
    S cal_v;     // at l^n x
    S cal_x;     // at k^n v
    S cal_y;     // at k^n u
    S d_scaled;  // rows and columns of k^n u and l^n y removed
};

template <ExactField S>
CominorSet<S> cominors(const OkadaLayout<S>& e) {
    const Index n = e.n;
    const Index ru = e.u_row(n), rv = e.v_row(n);
    const Index cl = e.left_col(n), cr = e.right_col(n);
    return {det_exact(minor_matrix(e.matrix, rv, cr)),
            det_exact(minor_matrix(e.matrix, ru, cr)),
            det_exact(minor_matrix(e.matrix, rv, cl)),
            det_exact(minor_matrix(e.matrix, ru, cl)),
            det_exact(minor_matrix(e.matrix, MinorSpec{{ru, rv}, {cl, cr}}))};
}

template <ExactField S>
CominorSet<S> cominors(const SextupleSystem<S>& sys) {
    return cominors(okada_matrix(sys));
}

/// E D = Y U - X V on the co-minors, the four prefactor relations tying the
/// co-minors to the raw borders, the scaled double minor, and agreement with
/// jacobi_sides applied to E' at the same two rows and columns.
template <ExactField S>
VerificationReport verify_cominor_identities(const SextupleSystem<S>& sys) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const Index n = sys.n();
    const auto layout = okada_matrix(sys);
    const auto c = cominors(layout);
    const auto b = border_determinants(sys);
    const S e = det_exact(layout.matrix);

    report.check("cominor_jacobi", e * c.d_scaled, c.cal_y * c.cal_u - c.cal_x * c.cal_v);

    const S base = detail::gap_product(sys, n, n);
    const S to_k = detail::right_gaps_to_k(sys);
    const S to_l = detail::left_gaps_to_l(sys);
    const S up = sign_power<S>(detail::tri_up(n));
    const S down = sign_power<S>(detail::tri_down(n));
    report.check("prefactor_U", c.cal_u, up * base * to_k * b.u_raw);
    report.check("prefactor_V", c.cal_v, down * base * to_k * b.v_raw);
    report.check("prefactor_X", c.cal_x, up * base * to_l * b.x_raw);
    report.check("prefactor_Y", c.cal_y, down * base * to_l * b.y_raw);
    report.check("scaled_minor_D", c.d_scaled, down * base * b.dn);

    if (n == 0) {
        report.skip("cominor_jacobi_agreement", "E' is 2x2");
        return report;
    }
    const auto sides = jacobi_sides(layout.matrix, {layout.u_row(n), layout.v_row(n)},
                                    {layout.left_col(n), layout.right_col(n)});
    const bool agree = (sides.lhs == e * c.d_scaled) && (sides.rhs == c.cal_y * c.cal_u - c.cal_x * c.cal_v);
    if (agree) {
        report.pass("cominor_jacobi_agreement");
    } else {
        report.fail("cominor_jacobi_agreement",
                    {{"jacobi_lhs", to_string(sides.lhs)}, {"jacobi_rhs", to_string(sides.rhs)}});
    }
    return report;
}

/// The four (2n+1) x (2n+1) displays for U_n, V_n, X_n, Y_n.
template <ExactField S>
struct BigBorderDisplays {
    DenseMatrix<S> u, v, x, y;
};

template <ExactField S>
BigBorderDisplays<S> big_border_displays(const SextupleSystem<S>& sys) {
    const Index n = sys.n();
    const auto with_last = detail::iota_indices(n + 1);
    const auto without_last = detail::iota_indices(n);
    return {moment_display(sys, n + 1, n, with_last, without_last),
            moment_display(sys, n, n + 1, with_last, without_last),
            moment_display(sys, n + 1, n, without_last, with_last),
            moment_display(sys, n, n + 1, without_last, with_last)};
}

/// Each display divided by its displayed denominator must equal the
/// normalised border. Throws DegenerateMinor when D_n = 0.
template <ExactField S>
VerificationReport big_border_representations(const SextupleSystem<S>& sys) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const Index n = sys.n();
    const auto b = border_determinants(sys);
    const auto nb = normalized_borders(b);
    const auto d = big_border_displays(sys);

    const S base = detail::gap_product(sys, n, n) * b.dn;
    const S odd_sign = sign_power<S>(n) * sign_power<S>(detail::tri_down(n));
    const S even_sign = sign_power<S>(detail::tri_down(n));
    const S to_k = detail::right_gaps_to_k(sys);
    const S to_l = detail::left_gaps_to_l(sys);

    report.check("big_U", det_exact(d.u) / (odd_sign * base * to_k), nb.u);
    report.check("big_V", det_exact(d.v) / (even_sign * base * to_k), nb.v);
    report.check("big_X", det_exact(d.x) / (odd_sign * base * to_l), nb.x);
    report.check("big_Y", det_exact(d.y) / (even_sign * base * to_l), nb.y);
    return report;
}

}  // namespace repdet

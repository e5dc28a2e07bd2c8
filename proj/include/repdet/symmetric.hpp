#pragma once

// The specialisation x_i = u_i, y_i = -v_i, l_i = -k_i. The kernel becomes
// the symmetric matrix (u_i v_j + u_j v_i) / (k_i + k_j) and
//
//     D_{n+1} D_n k = U_n^raw V_n^raw.
//
// Both D_{n+1} and D_n split into products of two "alternating" moment
// determinants whose rows switch between u and v.
//
// Note: the usual printed form of the specialised entry,
// (u_i v_j + v_j u_i) / (k_i + k_j), is not symmetric in (i, j); entries here
// come from substituting into the general kernel.

#include <utility>
#include <vector>

#include "repdet/okada.hpp"

namespace repdet {

/// n + 1 triplets (u_i, v_i, k_i) with k_i + k_j != 0 for all i, j and the
/// k_i pairwise distinct.
template <ExactField S>
class SymmetricSystem {
public:
    using Scalar = S;

    explicit SymmetricSystem(std::vector<LeftTriplet<S>> triplets) : triplets_(std::move(triplets)) {
        if (triplets_.empty()) throw InvalidSystem("symmetric system needs at least one triplet");
        for (std::size_t i = 0; i < triplets_.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                if (is_zero(triplets_[i].k + triplets_[j].k)) {
                    throw InvalidSystem("k_" + std::to_string(i + 1) + " + k_" + std::to_string(j + 1) + " vanishes");
                }
                if (j < i && triplets_[i].k == triplets_[j].k) throw InvalidSystem("duplicate k values");
            }
        }
    }

    [[nodiscard]] Index n() const { return static_cast<Index>(triplets_.size()) - 1; }
    [[nodiscard]] const std::vector<LeftTriplet<S>>& triplets() const { return triplets_; }
    [[nodiscard]] const LeftTriplet<S>& triplet(Index i) const { return triplets_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const SymmetricSystem&, const SymmetricSystem&) = default;

private:
    std::vector<LeftTriplet<S>> triplets_;
};

inline SymmetricSystem<Fp> project_mod_p(const SymmetricSystem<Rational>& sys, std::uint64_t p) {
    std::vector<LeftTriplet<Fp>> t;
    for (const auto& [u, v, k] : sys.triplets()) t.push_back({project_mod_p(u, p), project_mod_p(v, p), project_mod_p(k, p)});
    try {
        return SymmetricSystem<Fp>(std::move(t));
    } catch (const InvalidSystem& e) {
        throw BadReduction(std::string("symmetric system degenerates mod ") + std::to_string(p) + ": " + e.what());
    }
}

/// General system with right triplets (u_i, -v_i, -k_i).
template <ExactField S>
SextupleSystem<S> lift(const SymmetricSystem<S>& sym) {
    std::vector<RightTriplet<S>> right;
    right.reserve(sym.triplets().size());
    for (const auto& [u, v, k] : sym.triplets()) right.push_back({u, -v, -k});
    return {sym.triplets(), std::move(right)};
}

/// X^raw at (u, -v, -k) equals U^raw at (u, v, k); Y^raw there equals -V^raw.
/// Also records that the lifted kernel is symmetric and that the general
/// identity holds on the lift.
template <ExactField S>
VerificationReport verify_reflection(const SymmetricSystem<S>& sym) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto sys = lift(sym);
    const auto b = border_determinants(sys);
    report.check("reflection_X_is_U", b.x_raw, b.u_raw);
    report.check("reflection_Y_is_minus_V", b.y_raw, S(-b.v_raw));

    const auto kernel = kernel_matrix(sys, sys.n() + 1);
    bool symmetric = true;
    for (Index i = 0; i < kernel.rows() && symmetric; ++i) {
        for (Index j = 0; j < i; ++j) {
            if (!(kernel(i, j) == kernel(j, i))) {
                report.fail("lifted_kernel_symmetric", {{"entry", std::to_string(i) + "," + std::to_string(j)},
                                                        {"lhs", to_string(kernel(i, j))},
                                                        {"rhs", to_string(kernel(j, i))}});
                symmetric = false;
                break;
            }
        }
    }
    if (symmetric) report.pass("lifted_kernel_symmetric");

    const S gap = sys.right(sys.n()).l - sys.left(sys.n()).k;
    report.check("lifted_main_theorem", b.dn1 * b.dn * gap, b.y_raw * b.u_raw - b.x_raw * b.v_raw);
    return report;
}

/// D_{n+1} D_n k = U^raw V^raw.
template <ExactField S>
VerificationReport verify_factorization(const SymmetricSystem<S>& sym) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const auto b = border_determinants(lift(sym));
    report.check("factorization_DD", b.dn1 * b.dn * sym.triplet(sym.n()).k, b.u_raw * b.v_raw);
    return report;
}

enum class Lead { u, v };

/// m x m matrix with row r (0-based) equal to k_j^r u_j or k_j^r v_j; u-led
/// starts with u and alternates, v-led starts with v. m in {n, n + 1}.
template <ExactField S>
DenseMatrix<S> alternating_matrix(const SymmetricSystem<S>& sym, Lead lead, Index m) {
    if (m != sym.n() && m != sym.n() + 1) throw SizeError("alternating_matrix size must be n or n+1");
    DenseMatrix<S> out(m, m);
    for (Index j = 0; j < m; ++j) {
        const auto& t = sym.triplet(j);
        S power(1);
        for (Index r = 0; r < m; ++r) {
            const bool take_u = ((r % 2 == 0) == (lead == Lead::u));
            out(r, j) = power * (take_u ? t.u : t.v);
            power = power * t.k;
        }
    }
    return out;
}

namespace detail {

/// prod over ordered pairs i, j < count of (k_i + k_j), diagonal included.
template <ExactField S>
S pair_sum_product(const SymmetricSystem<S>& sym, Index count) {
    S p(1);
    for (Index i = 0; i < count; ++i) {
        for (Index j = 0; j < count; ++j) p = p * (sym.triplet(i).k + sym.triplet(j).k);
    }
    return p;
}

}  // namespace detail

/// D_{n+1} and D_n as 2^m det(u-led) det(v-led) / prod (k_i + k_j), and the
/// parity rules for the quotients det(m = n+1) / (det(m = n) prod_j (k + k_j)):
///   n even: u-led gives U_n, v-led gives V_n
///   n odd:  u-led gives V_n, v-led gives U_n
/// The parity claims are skipped when D_n = 0.
template <ExactField S>
VerificationReport verify_alternating_factorizations(const SymmetricSystem<S>& sym) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const Index n = sym.n();
    const auto b = border_determinants(lift(sym));

    const S u_full = det_exact(alternating_matrix(sym, Lead::u, n + 1));
    const S v_full = det_exact(alternating_matrix(sym, Lead::v, n + 1));
    const S u_lead = det_exact(alternating_matrix(sym, Lead::u, n));
    const S v_lead = det_exact(alternating_matrix(sym, Lead::v, n));

    report.check("alternating_Dn1", b.dn1,
                 ipow(S(2), static_cast<unsigned>(n + 1)) * u_full * v_full / detail::pair_sum_product(sym, n + 1));
    report.check("alternating_Dn", b.dn,
                 ipow(S(2), static_cast<unsigned>(n)) * u_lead * v_lead / detail::pair_sum_product(sym, n));

    if (is_zero(b.dn)) {
        report.skip("parity_u_led", "D_n vanishes");
        report.skip("parity_v_led", "D_n vanishes");
        return report;
    }
    const auto nb = normalized_borders(b);
    S gaps(1);
    for (Index j = 0; j < n; ++j) gaps = gaps * (sym.triplet(n).k + sym.triplet(j).k);
    const S u_quotient = u_full / (u_lead * gaps);
    const S v_quotient = v_full / (v_lead * gaps);
    switch (n % 2) {
        case 0:
            report.check("parity_u_led", u_quotient, nb.u);
            report.check("parity_v_led", v_quotient, nb.v);
            break;
        default:
            report.check("parity_u_led", u_quotient, nb.v);
            report.check("parity_v_led", v_quotient, nb.u);
            break;
    }
    return report;
}

/// The (2n+1) x (2n+1) displays for U_n and V_n on the lifted system, with
/// the denominators rewritten in terms of k_i + k_j.
template <ExactField S>
VerificationReport verify_symmetric_big_borders(const SymmetricSystem<S>& sym) {
    VerificationReport report;
    ScopedRecordTimer timer(report);
    const Index n = sym.n();
    const auto sys = lift(sym);
    const auto b = border_determinants(sys);
    if (is_zero(b.dn)) {
        report.skip("symmetric_big_U", "D_n vanishes");
        report.skip("symmetric_big_V", "D_n vanishes");
        return report;
    }
    const auto nb = normalized_borders(b);
    const auto d = big_border_displays(sys);
    S to_k(1);
    for (Index j = 0; j < n; ++j) to_k = to_k * (sym.triplet(n).k + sym.triplet(j).k);
    const S base = b.dn * detail::pair_sum_product(sym, n) * to_k;
    report.check("symmetric_big_U", det_exact(d.u) / (sign_power<S>(detail::tri_up(n)) * base), nb.u);
    report.check("symmetric_big_V", det_exact(d.v) / (sign_power<S>(detail::tri_down(n)) * base), nb.v);
    return report;
}

}  // namespace repdet

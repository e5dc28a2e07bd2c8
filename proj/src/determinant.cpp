#include "repdet/determinant.hpp"

#include <random>
#include <unordered_set>

#include "repdet/crt.hpp"

namespace repdet {

Integer det_bareiss(DenseMatrix<Integer> a) {
    detail::require_square(a);
    const Index n = a.rows();
    if (n == 0) return 1;
    Integer previous = 1;
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        Index pivot = k;
        while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k);
                t -= a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

Integer det_exact(const DenseMatrix<Integer>& m) { return det_bareiss(m); }

Rational det_exact(const DenseMatrix<Rational>& m) {
    detail::require_square(m);
    std::size_t max_bits = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            max_bits = std::max(max_bits, mpz_sizeinbase(m(i, j).value().get_den_mpz_t(), 2));
        }
    }
    if (max_bits <= kClearDenominatorBits) {
        const ClearedMatrix cleared = clear_denominators(m);
        return Rational::normalize(det_bareiss(cleared.matrix), cleared.scale);
    }
    return det_field_elimination(m);
}

Fp det_exact(const DenseMatrix<Fp>& m) {
    field_modulus(m);
    return det_field_elimination(m);
}

Integer hadamard_bound(const DenseMatrix<Integer>& m) {
    Integer bound = 1;
    for (Index i = 0; i < m.rows(); ++i) {
        Integer sq = 0;
        for (Index j = 0; j < m.cols(); ++j) sq += m(i, j) * m(i, j);
        Integer root;
        mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
        if (root * root != sq) ++root;
        bound *= root;
    }
    return bound;
}

std::uint64_t det_mod_prime(const DenseMatrix<Integer>& m, std::uint64_t p) {
    detail::require_square(m);
    using u128 = unsigned __int128;
    const Index n = m.rows();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
    }
    auto at = [&](Index i, Index j) -> std::uint64_t& { return a[static_cast<std::size_t>(i * n + j)]; };
    auto mul = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>(static_cast<u128>(x) * y % p); };

    std::uint64_t det = 1;
    for (Index k = 0; k < n; ++k) {
        Index pivot = k;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (Index j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            det = det == 0 ? 0 : p - det;
        }
        det = mul(det, at(k, k));
        const std::uint64_t inv = inverse(Fp::from_residue(at(k, k), p)).residue();
        for (Index i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            const std::uint64_t factor = mul(at(i, k), inv);
            for (Index j = k + 1; j < n; ++j) {
                const std::uint64_t sub = mul(factor, at(k, j));
                std::uint64_t& x = at(i, j);
                x = x >= sub ? x - sub : x + (p - sub);
            }
        }
    }
    return det;
}

Integer det_multimodular(const DenseMatrix<Integer>& m, std::uint64_t seed) {
    detail::require_square(m);
    const Integer bound = hadamard_bound(m);
    if (sgn(bound) == 0) return 0;
    const Integer target = 2 * bound;

    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> used;
    std::vector<Residue> residues;
    Integer product = 1;
    while (product <= target) {
        const std::uint64_t p = random_prime(rng);
        if (!used.insert(p).second) continue;
        const Integer pz(static_cast<unsigned long>(p));
        residues.push_back({Integer(static_cast<unsigned long>(det_mod_prime(m, p))), pz});
        product *= pz;
    }
    return crt_combine(residues);
}

}  // namespace repdet

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "repdet/random.hpp"

using namespace repdet;
using oracle::q;

namespace {

SymmetricSystem<Rational> make(std::vector<std::array<long, 3>> t) {
    std::vector<LeftTriplet<Rational>> out;
    for (const auto& [u, v, k] : t) out.push_back({q(u), q(v), q(k)});
    return SymmetricSystem<Rational>(out);
}

std::vector<oracle::Sextuple> lifted_params(const SymmetricSystem<Rational>& sym) {
    std::vector<oracle::Sextuple> p;
    for (const auto& t : sym.triplets()) p.push_back({t.u, t.v, t.k, t.u, -t.v, -t.k});
    return p;
}

Verdict verdict_of(const VerificationReport& r, const std::string& id) {
    for (const auto& rec : r.records()) {
        if (rec.identity == id) return rec.verdict;
    }
    return Verdict::fail;
}

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("lift and kernel") {
    const auto one = make({{1, 1, 1}});
    CHECK(kernel_matrix(lift(one), 1)(0, 0) == q(1));
    const auto s2 = make({{1, 1, 1}, {1, 3, 2}});
    const auto k = kernel_matrix(lift(s2), 2);
    CHECK(oracle::to_grid(k) == oracle::kernel(lifted_params(s2), 2));
    CHECK(oracle::to_grid(k) == oracle::Grid<Rational>{{q(1), q(4, 3)}, {q(4, 3), q(3, 2)}});
    CHECK(det_exact(k) == q(-5, 18));
    CHECK_THROWS_AS(make({{1, 1, 1}, {2, 2, -1}}), InvalidSystem);
    CHECK_THROWS_AS(make({{1, 1, 0}}), InvalidSystem);
    CHECK_THROWS_AS(make({{1, 1, 2}, {3, 1, 2}}), InvalidSystem);
}

TEST_CASE("S2 against the oracle") {
    const auto s2 = make({{1, 1, 1}, {1, 3, 2}});
    const auto p = lifted_params(s2);
    const auto raw = oracle::borders(p);
    CHECK(raw[0] == q(-1, 3));
    CHECK(raw[1] == q(5, 3));
    CHECK(raw[2] == raw[0]);
    CHECK(raw[3] == -raw[1]);
    const Rational d2 = oracle::leibniz(oracle::kernel(p, 2));
    const Rational d1 = oracle::leibniz(oracle::kernel(p, 1));
    CHECK(d2 == q(-5, 18));
    CHECK(d1 == q(1));
    CHECK(d2 * d1 * q(2) == raw[0] * raw[1]);

    const auto b = border_determinants(lift(s2));
    CHECK(b.u_raw == raw[0]);
    CHECK(b.v_raw == raw[1]);
    CHECK(b.x_raw == raw[2]);
    CHECK(b.y_raw == raw[3]);

    CHECK(verify_reflection(s2).passed());
    CHECK(verify_factorization(s2).passed());
    CHECK(verify_alternating_factorizations(s2).passed());
    CHECK(verify_symmetric_big_borders(s2).passed());
}

TEST_CASE("alternating matrices of S2") {
    const auto s2 = make({{1, 1, 1}, {1, 3, 2}});
    const auto u = alternating_matrix(s2, Lead::u, 2);
    const auto v = alternating_matrix(s2, Lead::v, 2);
    CHECK(oracle::to_grid(u) == oracle::Grid<Rational>{{q(1), q(1)}, {q(1), q(6)}});
    CHECK(oracle::to_grid(v) == oracle::Grid<Rational>{{q(1), q(3)}, {q(1), q(2)}});
    CHECK(oracle::leibniz(oracle::to_grid(u)) == q(5));
    CHECK(oracle::leibniz(oracle::to_grid(v)) == q(-1));
    // ordered-pair product: (1+1)(1+2)(2+1)(2+2) = 72
    CHECK(q(4) * q(5) * q(-1) / q(72) == q(-5, 18));
    CHECK(alternating_matrix(s2, Lead::u, 1)(0, 0) == q(1));
    CHECK_THROWS_AS(alternating_matrix(s2, Lead::u, 3), SizeError);

    // n = 1 is odd: v-led quotient is U_1, u-led quotient is V_1
    const Rational gaps = q(2 + 1);
    CHECK(oracle::leibniz(oracle::to_grid(v)) / (q(1) * gaps) == q(-1, 3));
    CHECK(oracle::leibniz(oracle::to_grid(u)) / (q(1) * gaps) == q(5, 3));
}

TEST_CASE("n = 0") {
    const auto one = make({{3, -2, 5}});
    CHECK(verify_reflection(one).passed());
    CHECK(verify_factorization(one).passed());
    CHECK(verify_alternating_factorizations(one).passed());
    CHECK(border_determinants(lift(one)).dn1 == q(3) * q(-2) / q(5));
}

TEST_CASE("seeded property runs") {
    std::mt19937_64 r17(17);
    CHECK(verify_reflection(random_symmetric_system<Rational>(3, r17, 20)).passed());
    std::mt19937_64 r29(29);
    CHECK(verify_factorization(random_symmetric_system<Rational>(4, r29, 20)).passed());
}

TEST_CASE("all symmetric identities over Q and a prime field, both parities") {
    std::mt19937_64 rng(63);
    for (Index n = 1; n <= 6; ++n) {
        for (int t = 0; t < 6; ++t) {
            const auto sym = random_symmetric_system<Rational>(n, rng, 20);
            const auto alt = verify_alternating_factorizations(sym);
            CHECK(alt.passed());
            if (!border_determinants(lift(sym)).dn.is_zero()) {
                CHECK(verdict_of(alt, "parity_u_led") == Verdict::pass);
                CHECK(verdict_of(alt, "parity_v_led") == Verdict::pass);
            }
            CHECK(verify_reflection(sym).passed());
            CHECK(verify_factorization(sym).passed());
            CHECK(verify_symmetric_big_borders(sym).passed());
            const auto fp = project_mod_p(sym, random_prime(rng));
            CHECK(verify_alternating_factorizations(fp).passed());
            CHECK(verify_factorization(fp).passed());
        }
    }
}

TEST_CASE("lifted kernel is symmetric") {
    std::mt19937_64 rng(12);
    const auto sym = random_symmetric_system<Rational>(5, rng, 20);
    const auto k = kernel_matrix(lift(sym), 6);
    CHECK(k == DenseMatrix<Rational>(k.transpose()));
}

}

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "repdet/random.hpp"

using namespace repdet;
using oracle::q;

namespace {

SextupleSystem<Rational> make(const std::vector<oracle::Sextuple>& p) {
    std::vector<LeftTriplet<Rational>> left;
    std::vector<RightTriplet<Rational>> right;
    for (const auto& s : p) {
        left.push_back({s.u, s.v, s.k});
        right.push_back({s.x, s.y, s.l});
    }
    return {left, right};
}

std::vector<oracle::Sextuple> params(const SextupleSystem<Rational>& sys) {
    std::vector<oracle::Sextuple> p;
    for (Index i = 0; i <= sys.n(); ++i)
        p.push_back({sys.left(i).u, sys.left(i).v, sys.left(i).k, sys.right(i).x, sys.right(i).y, sys.right(i).l});
    return p;
}

/// E' written out entry by entry.
oracle::Grid<Rational> moment_grid(const std::vector<oracle::Sextuple>& p) {
    const std::size_t m = p.size();
    oracle::Grid<Rational> g(2 * m, std::vector<Rational>(2 * m));
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < m; ++r) {
            const Rational kp = pow(p[c].k, static_cast<unsigned>(r));
            const Rational lp = pow(p[c].l, static_cast<unsigned>(r));
            g[r][c] = kp * p[c].u;
            g[m + r][c] = kp * p[c].v;
            g[r][m + c] = lp * p[c].x;
            g[m + r][m + c] = lp * p[c].y;
        }
    }
    return g;
}

const std::vector<oracle::Sextuple> kS1{{q(1), q(1), q(0), q(1), q(2), q(1)}, {q(1), q(3), q(2), q(1), q(1), q(3)}};

}  // namespace

TEST_SUITE("okada") {

TEST_CASE("smallest layout") {
    const auto sys = make({{q(1), q(2), q(0), q(3), q(4), q(5)}});
    const auto e = okada_matrix(sys).matrix;
    CHECK(oracle::to_grid(e) == oracle::Grid<Rational>{{q(1), q(3)}, {q(2), q(4)}});
    CHECK(det_exact(e) == q(-2));
    CHECK(scaled_kernel_det(sys) == q(-2));
    CHECK(verify_okada(sys).passed());

    const auto c = cominors(sys);
    CHECK(c.cal_u == q(1));
    CHECK(c.cal_v == q(2));
    CHECK(c.cal_x == q(3));
    CHECK(c.cal_y == q(4));
    CHECK(c.d_scaled == q(1));
    CHECK(verify_cominor_identities(sys).passed());
}

TEST_CASE("S1 layout, E and co-minors against the oracle") {
    const auto sys = make(kS1);
    const auto layout = okada_matrix(sys);
    const auto grid = moment_grid(kS1);
    CHECK(oracle::to_grid(layout.matrix) == grid);
    CHECK(grid[1] == std::vector<Rational>{q(0), q(2), q(1), q(3)});

    const Rational e = oracle::leibniz(grid);
    CHECK(e == q(-6));
    CHECK(scaled_kernel_det(sys) == e);
    CHECK(verify_okada(sys).passed());

    const auto c = cominors(layout);
    CHECK(c.cal_y == oracle::leibniz(oracle::drop(grid, {1}, {1})));
    CHECK(c.cal_x == oracle::leibniz(oracle::drop(grid, {3}, {1})));
    CHECK(c.cal_v == oracle::leibniz(oracle::drop(grid, {1}, {3})));
    CHECK(c.cal_u == oracle::leibniz(oracle::drop(grid, {3}, {3})));
    CHECK(c.d_scaled == oracle::leibniz(oracle::drop(grid, {1, 3}, {1, 3})));
    CHECK(c.d_scaled == q(1));
    CHECK(verify_cominor_identities(sys).passed());

    const auto big = big_border_representations(sys);
    CHECK(big.passed());
    CHECK(big.count(Verdict::pass) == 4);
}

TEST_CASE("sign of the scaling") {
    CHECK(sign_power<Rational>(detail::tri_up(2)) == q(-1));
    CHECK(sign_power<Rational>(detail::tri_up(3)) == q(1));
    CHECK(sign_power<Rational>(detail::tri_up(4)) == q(1));
}

TEST_CASE("seeded property runs") {
    std::mt19937_64 r11(11);
    CHECK(verify_okada(random_system<Rational>(4, r11, 20)).passed());
    std::mt19937_64 r5(5);
    CHECK(verify_cominor_identities(random_system<Rational>(3, r5, 20)).passed());
    std::mt19937_64 r3(3);
    CHECK(big_border_representations(random_system<Rational>(2, r3, 20)).passed());
}

TEST_CASE("E' and co-minors against the oracle for n <= 2") {
    std::mt19937_64 rng(41);
    for (Index n = 0; n <= 2; ++n) {
        for (int t = 0; t < 4; ++t) {
            const auto sys = random_system<Rational>(n, rng, 12);
            const auto p = params(sys);
            const auto grid = moment_grid(p);
            CHECK(oracle::leibniz(grid) == scaled_kernel_det(sys));
            const std::size_t ru = static_cast<std::size_t>(n), rv = static_cast<std::size_t>(2 * n + 1);
            const auto c = cominors(sys);
            CHECK(c.cal_u == oracle::leibniz(oracle::drop(grid, {rv}, {rv})));
            CHECK(c.cal_y == oracle::leibniz(oracle::drop(grid, {ru}, {ru})));
        }
    }
}

TEST_CASE("identities over Q and a prime field for n <= 4") {
    std::mt19937_64 rng(8);
    for (Index n = 0; n <= 4; ++n) {
        for (int t = 0; t < 8; ++t) {
            const auto sys = random_system<Rational>(n, rng, 20);
            CHECK(verify_okada(sys).passed());
            CHECK(verify_cominor_identities(sys).passed());
            CHECK(big_border_representations(sys).passed());
            const auto fp = project_mod_p(sys, random_prime(rng));
            CHECK(verify_okada(fp).passed());
            CHECK(verify_cominor_identities(fp).passed());
        }
    }
}

TEST_CASE("big borders need D_n") {
    const auto sys = make({{q(1), q(1), q(0), q(1), q(1), q(1)}, {q(2), q(-1), q(3), q(4), q(1), q(5)}});
    CHECK_THROWS_AS(big_border_representations(sys), DegenerateMinor);
    CHECK(verify_cominor_identities(sys).passed());
}

}

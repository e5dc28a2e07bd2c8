#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "repdet/minors.hpp"
#include "repdet/random.hpp"

using namespace repdet;

namespace {

DenseMatrix<Integer> diag(std::initializer_list<long> d) {
    DenseMatrix<Integer> m = DenseMatrix<Integer>::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    Index i = 0;
    for (long v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_SUITE("minors") {

TEST_CASE("jacobi on diagonal and rank-one matrices") {
    const auto s = jacobi_sides(diag({2, 3, 5}), {0, 1}, {0, 1});
    CHECK(s.lhs == 150);
    CHECK(s.rhs == 150);
    const DenseMatrix<Integer> ones = DenseMatrix<Integer>::Constant(3, 3, Integer(1));
    CHECK(jacobi_check(ones, {0, 2}, {1, 2}).passed());
    CHECK_THROWS_AS(jacobi_check(diag({1, 2}), {0, 1}, {0, 1}), SizeError);
    CHECK_THROWS_AS(jacobi_check(diag({1, 2, 3}), {1, 1}, {0, 1}), IndexError);
    CHECK_THROWS_AS(jacobi_check(diag({1, 2, 3}), {0, 3}, {0, 1}), IndexError);
}

TEST_CASE("jacobi on a seeded 5x5 against the oracle") {
    std::mt19937_64 rng(21);
    const auto m = random_integer_matrix(5, 5, rng, 9);
    const auto g = oracle::to_grid(m);
    const Integer lhs = oracle::leibniz(g) * oracle::leibniz(oracle::drop(g, {1, 3}, {0, 4}));
    const Integer rhs = oracle::leibniz(oracle::drop(g, {1}, {0})) * oracle::leibniz(oracle::drop(g, {3}, {4})) -
                        oracle::leibniz(oracle::drop(g, {1}, {4})) * oracle::leibniz(oracle::drop(g, {3}, {0}));
    const auto s = jacobi_sides(m, {3, 1}, {4, 0});
    CHECK(s.lhs == lhs);
    CHECK(s.rhs == rhs);
    CHECK(lhs == rhs);
}

TEST_CASE("sylvester") {
    const auto id = sylvester_sides(DenseMatrix<Integer>(DenseMatrix<Integer>::Identity(3, 3)), 2);
    CHECK(id.lhs == 1);
    CHECK(id.rhs == 1);
    const auto d = sylvester_sides(diag({2, 3, 5, 7}), 2);
    CHECK(d.lhs == 6 * 35 * 35);
    CHECK(d.rhs == 7350);
    std::mt19937_64 rng(8);
    CHECK(sylvester_bordered(random_integer_matrix(6, 6, rng, 9), 3).passed());
    CHECK_THROWS_AS(sylvester_bordered(diag({1, 2, 3}), 3), SizeError);
}

TEST_CASE("adjugate") {
    const DenseMatrix<Integer> id = DenseMatrix<Integer>::Identity(3, 3);
    CHECK(adjugate(id) == id);
    CHECK(adjugate(diag({2, 3, 5})) == diag({15, 10, 6}));
    const auto s = adjugate_minor_sides(diag({2, 3, 5}), 2);
    CHECK(s.lhs == 150);
    CHECK(s.rhs == 150);
    std::mt19937_64 rng(13);
    CHECK(adjugate_minor_check(random_integer_matrix(5, 5, rng, 9), 2).passed());

    // adj(M) M = det(M) I
    std::mt19937_64 r2(2);
    const auto m = random_integer_matrix(4, 4, r2, 9);
    const DenseMatrix<Integer> prod = adjugate(m) * m;
    CHECK(prod == DenseMatrix<Integer>(DenseMatrix<Integer>::Identity(4, 4) * det_exact(m)));
}

TEST_CASE("sylvester with k = 2 agrees with jacobi on the same corner") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const Index n = uniform_int(rng, 3, 7);
        const auto m = random_integer_matrix(n, n, rng, 9);
        const auto j = jacobi_sides(m, {0, 1}, {0, 1});
        const auto s = sylvester_sides(m, 2);
        CHECK(j.lhs == s.rhs);
        CHECK(j.rhs == s.lhs);
    }
}

TEST_CASE("identities over integers, rationals and a prime field, including singular input") {
    std::mt19937_64 rng(55);
    const std::uint64_t p = random_prime(rng);
    for (int t = 0; t < 40; ++t) {
        const Index n = uniform_int(rng, 3, 8);
        const Index k = uniform_int(rng, 2, std::min<Index>(4, n - 1));
        const auto z = t % 3 == 0 ? random_low_rank_matrix(n, n - 2, rng, 5) : random_integer_matrix(n, n, rng, 9);
        const auto q = random_rational_matrix(n, n, rng, 9, 5);
        const auto f = project_mod_p(z, p);
        std::array<Index, 2> rows{uniform_int(rng, 0, n - 1), 0}, cols{uniform_int(rng, 0, n - 1), 0};
        do rows[1] = uniform_int(rng, 0, n - 1); while (rows[1] == rows[0]);
        do cols[1] = uniform_int(rng, 0, n - 1); while (cols[1] == cols[0]);
        CHECK(jacobi_check(z, rows, cols).passed());
        CHECK(jacobi_check(q, rows, cols).passed());
        CHECK(jacobi_check(f, rows, cols).passed());
        CHECK(sylvester_bordered(z, k).passed());
        CHECK(sylvester_bordered(q, k).passed());
        CHECK(adjugate_minor_check(z, k).passed());
        CHECK(adjugate_minor_check(f, k).passed());
    }
}

TEST_CASE("a broken identity is reported, not thrown") {
    VerificationReport r;
    CHECK_FALSE(r.check("probe", Integer(1), Integer(2)));
    CHECK_FALSE(r.passed());
    REQUIRE(r.records().size() == 1);
    CHECK(r.records()[0].witnesses.size() == 2);
}

}

#include "repdet/random.hpp"

namespace repdet {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = rng();
    while (draw >= limit) draw = rng();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

DenseMatrix<Integer> random_integer_matrix(Index rows, Index cols, std::mt19937_64& rng, std::int64_t range) {
    DenseMatrix<Integer> m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<long>(uniform_int(rng, -range, range));
    }
    return m;
}

DenseMatrix<Rational> random_rational_matrix(Index rows, Index cols, std::mt19937_64& rng, std::int64_t range,
                                             std::int64_t max_den) {
    DenseMatrix<Rational> m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const long num = static_cast<long>(uniform_int(rng, -range, range));
            const long den = static_cast<long>(uniform_int(rng, 1, max_den));
            m(i, j) = Rational::normalize(Integer(num), Integer(den));
        }
    }
    return m;
}

DenseMatrix<Integer> random_low_rank_matrix(Index size, Index rank, std::mt19937_64& rng, std::int64_t range) {
    const DenseMatrix<Integer> a = random_integer_matrix(size, rank, rng, range);
    const DenseMatrix<Integer> b = random_integer_matrix(rank, size, rng, range);
    DenseMatrix<Integer> m(size, size);
    for (Index i = 0; i < size; ++i) {
        for (Index j = 0; j < size; ++j) {
            Integer acc = 0;
            for (Index t = 0; t < rank; ++t) acc += a(i, t) * b(t, j);
            m(i, j) = acc;
        }
    }
    return m;
}

}  // namespace repdet

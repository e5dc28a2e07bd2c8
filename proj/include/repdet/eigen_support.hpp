#pragma once

// NumTraits for the exact scalars so they can live in Eigen dense storage.
// Only storage, blocks, indexing and transposition are relied upon; the
// determinant engines are written against the scalar's own arithmetic.

#include <Eigen/Core>

#include "repdet/prime_field.hpp"
#include "repdet/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<repdet::Rational> : GenericNumTraits<repdet::Rational> {
    using Real = repdet::Rational;
    using NonInteger = repdet::Rational;
    using Nested = repdet::Rational;
    using Literal = repdet::Rational;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };
    static inline repdet::Rational epsilon() { return 0; }
    static inline repdet::Rational dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<repdet::Fp> : GenericNumTraits<repdet::Fp> {
    using Real = repdet::Fp;
    using NonInteger = repdet::Fp;
    using Nested = repdet::Fp;
    using Literal = repdet::Fp;
    enum {
        IsInteger = 0,
        IsSigned = 0,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline repdet::Fp epsilon() { return 0; }
    static inline repdet::Fp dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<repdet::Integer> : GenericNumTraits<repdet::Integer> {
    using Real = repdet::Integer;
    using NonInteger = repdet::Rational;
    using Nested = repdet::Integer;
    using Literal = repdet::Integer;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 6,
        MulCost = 12
    };
    static inline repdet::Integer epsilon() { return 0; }
    static inline repdet::Integer dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#pragma once

#include <stdexcept>
#include <string>

namespace repdet {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define REPDET_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

// scalars
REPDET_DEFINE_ERROR(ZeroDenominator);
REPDET_DEFINE_ERROR(DivisionByZero);
REPDET_DEFINE_ERROR(BadReduction);
REPDET_DEFINE_ERROR(InvalidModuli);
REPDET_DEFINE_ERROR(NotPrime);
REPDET_DEFINE_ERROR(FieldMismatch);
REPDET_DEFINE_ERROR(ParseError);

// detcore
REPDET_DEFINE_ERROR(ShapeError);
REPDET_DEFINE_ERROR(SizeGuard);
REPDET_DEFINE_ERROR(IndexError);

// kernel / okada / symmetric
REPDET_DEFINE_ERROR(InvalidSystem);
REPDET_DEFINE_ERROR(SingularDenominator);
REPDET_DEFINE_ERROR(SizeError);
REPDET_DEFINE_ERROR(DegenerateMinor);
REPDET_DEFINE_ERROR(DegenerateChain);

// cli
REPDET_DEFINE_ERROR(GenerationFailed);

#undef REPDET_DEFINE_ERROR

}  // namespace repdet

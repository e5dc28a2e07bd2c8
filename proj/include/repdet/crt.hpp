#pragma once

#include <span>

#include "repdet/rational.hpp"

namespace repdet {

struct Residue {
    Integer value;
    Integer modulus;
};

/// Chinese remaindering of pairwise coprime moduli.
///
/// Returns the unique representative in the symmetric range (-M/2, M/2],
/// M the product of the moduli, so signed values come back with their sign.
/// Throws InvalidModuli on a non-positive or non-coprime modulus.
Integer crt_combine(std::span<const Residue> residues);

}  // namespace repdet

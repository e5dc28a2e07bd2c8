#pragma once

#include <cstdint>
#include <string_view>

#include "repdet/instance.hpp"

namespace repdet {

enum class Suite { kernel, okada, minors, symmetric, all };

Suite parse_suite(std::string_view text);
const char* to_string(Suite s);

/// Identity suite over a general system. The symmetric suite is skipped.
template <ExactField S>
VerificationReport run_suite(const SextupleSystem<S>& sys, Suite suite);

/// Identity suite over a symmetric system; the kernel, okada and minors
/// suites run on its lift.
template <ExactField S>
VerificationReport run_suite(const SymmetricSystem<S>& sys, Suite suite);

struct VerifyOptions {
    Suite suite = Suite::all;
    unsigned primes = 3;        // extra runs over random 62-bit primes (rational instances)
    std::uint64_t seed = 0x7e57;  // prime sampling
};

/// Runs the suite over the instance's own field and, for rational instances,
/// over `primes` random primes, then records whether each identity got the
/// same verdict in every field. A stored kernel is compared entrywise with the
/// recomputed one.
VerificationReport verify_instance(const InstanceFile& file, const VerifyOptions& options);

struct BatchOptions {
    Mode mode = Mode::general;
    Index n = 1;
    std::uint64_t master_seed = 0;
    std::int64_t range = 20;
    unsigned trials = 1;
    unsigned threads = 0;  // 0: hardware concurrency
    VerifyOptions verify;
};

/// `trials` instances from split seeds of master_seed, verified
/// concurrently; records come back sorted by trial id.
VerificationReport verify_batch(const BatchOptions& options);

}  // namespace repdet

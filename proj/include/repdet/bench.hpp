#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repdet/matrix.hpp"

namespace repdet {

/// Median wall times (seconds) of the four engines on one kernel instance.
struct BenchRow {
    Index size = 0;                 // kernel dimension n + 1
    double det_exact_rational = 0;  // det_exact on the rational kernel
    double det_multimodular = 0;    // det_multimodular on the row-cleared kernel
    double prime_field_verify = 0;  // verify_main_theorem mod a 62-bit prime
    double det_by_bordering = 0;    // bordering chain, or det_exact when it degenerates
    bool bordering_fallback = false;
};

/// One general rational instance per size (kernel dimension), drawn from
/// `seed`; each engine is timed `reps` times and the median kept.
std::vector<BenchRow> run_bench(const std::vector<Index>& sizes, unsigned reps, std::uint64_t seed);

std::string bench_table(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

}  // namespace repdet

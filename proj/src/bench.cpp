#include "repdet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "repdet/random.hpp"

namespace repdet {

namespace {

template <typename Fn>
double median_seconds(unsigned reps, Fn&& fn) {
    std::vector<double> times;
    for (unsigned r = 0; r < std::max(1U, reps); ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    return times.size() % 2 == 1 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<Index>& sizes, unsigned reps, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        const Index size = sizes[idx];
        if (size < 1) throw SizeError("bench sizes must be >= 1");
        std::mt19937_64 rng(split_seed(seed, idx));
        const auto sys = random_system<Rational>(size - 1, rng, 20);
        const auto kernel = kernel_matrix(sys, size);
        const auto cleared = clear_denominators(kernel);

        // a prime that keeps the reduced system valid
        std::uint64_t p = 0;
        std::optional<SextupleSystem<Fp>> reduced;
        while (!reduced) {
            p = random_prime(rng);
            try {
                reduced = project_mod_p(sys, p);
            } catch (const BadReduction&) {
            }
        }

        BenchRow row;
        row.size = size;
        Rational sink;
        row.det_exact_rational = median_seconds(reps, [&] { sink = det_exact(kernel); });
        row.det_multimodular = median_seconds(reps, [&] {
            sink = Rational::normalize(det_multimodular(cleared.matrix, seed), cleared.scale);
        });
        row.prime_field_verify = median_seconds(reps, [&] { (void)verify_main_theorem(*reduced).passed(); });
        row.det_by_bordering = median_seconds(reps, [&] {
            try {
                sink = det_by_bordering(sys);
            } catch (const DegenerateChain&) {
                row.bordering_fallback = true;
                sink = det_exact(kernel);
            }
        });
        rows.push_back(row);
    }
    return rows;
}

std::string bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%6s %16s %16s %16s %16s\n", "size", "det_exact(Q)", "multimodular", "prime_verify",
                  "bordering");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%6ld %16.6e %16.6e %16.6e %16.6e%s\n", static_cast<long>(r.size),
                      r.det_exact_rational, r.det_multimodular, r.prime_field_verify, r.det_by_bordering,
                      r.bordering_fallback ? " (fallback)" : "");
        os << line;
    }
    return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        out.push_back({{"size", r.size},
                       {"det_exact_rational", r.det_exact_rational},
                       {"det_multimodular", r.det_multimodular},
                       {"prime_field_verify", r.prime_field_verify},
                       {"det_by_bordering", r.det_by_bordering},
                       {"bordering_fallback", r.bordering_fallback}});
    }
    return out.dump(2) + "\n";
}

}  // namespace repdet

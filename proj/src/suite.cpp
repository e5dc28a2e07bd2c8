#include "repdet/suite.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "repdet/random.hpp"

namespace repdet {

namespace {

/// Shifts a parameter until the perturbed system is valid again.
template <ExactField S, typename Build>
auto perturbed(const S& start, Build build) {
    for (int shift = 1;; ++shift) {
        try {
            return build(start + S(shift));
        } catch (const InvalidSystem&) {
        }
    }
}

template <ExactField S>
void kernel_suite(const SextupleSystem<S>& sys, VerificationReport& report) {
    report.merge(verify_main_theorem(sys));

    ScopedRecordTimer timer(report);
    const Index n = sys.n();
    const auto base = border_determinants(sys);

    // U, V never read (x, y, l); X, Y never read (u, v, k)
    const auto& r = sys.right(n);
    const auto moved_right = perturbed(r.l, [&](const S& l) { return sys.with_last_right({r.x + S(1), r.y - S(2), l}); });
    const auto after_right = border_determinants(moved_right);
    const bool uv_fixed = after_right.u_raw == base.u_raw && after_right.v_raw == base.v_raw;
    if (uv_fixed) {
        report.pass("uv_independent_of_xyl");
    } else {
        report.fail("uv_independent_of_xyl", {{"U_before", to_string(base.u_raw)}, {"U_after", to_string(after_right.u_raw)},
                                              {"V_before", to_string(base.v_raw)}, {"V_after", to_string(after_right.v_raw)}});
    }
    const auto& t = sys.left(n);
    const auto moved_left = perturbed(t.k, [&](const S& k) { return sys.with_last_left({t.u - S(3), t.v + S(1), k}); });
    const auto after_left = border_determinants(moved_left);
    const bool xy_fixed = after_left.x_raw == base.x_raw && after_left.y_raw == base.y_raw;
    if (xy_fixed) {
        report.pass("xy_independent_of_uvk");
    } else {
        report.fail("xy_independent_of_uvk", {{"X_before", to_string(base.x_raw)}, {"X_after", to_string(after_left.x_raw)},
                                              {"Y_before", to_string(base.y_raw)}, {"Y_after", to_string(after_left.y_raw)}});
    }

    try {
        report.check("det_by_bordering", det_by_bordering(sys), base.dn1);
    } catch (const DegenerateChain& e) {
        report.skip("det_by_bordering", e.what());
    }
}

template <ExactField S>
void okada_suite(const SextupleSystem<S>& sys, VerificationReport& report) {
    report.merge(verify_okada(sys));
    report.merge(verify_cominor_identities(sys));
    try {
        report.merge(big_border_representations(sys));
    } catch (const DegenerateMinor& e) {
        for (const char* id : {"big_U", "big_V", "big_X", "big_Y"}) report.skip(id, e.what());
    }
}

template <ExactField S>
void minors_suite(const SextupleSystem<S>& sys, VerificationReport& report) {
    const auto layout = okada_matrix(sys);
    const Index n = sys.n();
    if (n == 0) {
        for (const char* id : {"jacobi", "sylvester_k2", "adjugate_k2"}) report.skip(id, "E' is 2x2");
    } else {
        report.merge(jacobi_check(layout.matrix, {layout.u_row(n), layout.v_row(n)},
                                  {layout.left_col(n), layout.right_col(n)}));
        report.merge(sylvester_bordered(layout.matrix, 2));
        report.merge(adjugate_minor_check(layout.matrix, 2));
    }
    const auto kernel = kernel_matrix(sys, n + 1);
    if (kernel.rows() >= 3) {
        VerificationReport k;
        k.merge(jacobi_check(kernel, {0, kernel.rows() - 1}, {0, kernel.rows() - 1}));
        k.merge(sylvester_bordered(kernel, 2));
        k.merge(adjugate_minor_check(kernel, 2));
        for (auto& rec : k.records()) rec.identity = "kernel_" + rec.identity;
        report.merge(k);
    }
}

template <ExactField S>
void symmetric_suite(const SymmetricSystem<S>& sym, VerificationReport& report) {
    report.merge(verify_reflection(sym));
    report.merge(verify_factorization(sym));
    report.merge(verify_alternating_factorizations(sym));
    report.merge(verify_symmetric_big_borders(sym));
}

bool wants(Suite selected, Suite s) { return selected == Suite::all || selected == s; }

}  // namespace

Suite parse_suite(std::string_view text) {
    if (text == "kernel") return Suite::kernel;
    if (text == "okada") return Suite::okada;
    if (text == "minors") return Suite::minors;
    if (text == "symmetric") return Suite::symmetric;
    if (text == "all") return Suite::all;
    throw ParseError("unknown suite '" + std::string(text) + "'");
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::kernel: return "kernel";
        case Suite::okada: return "okada";
        case Suite::minors: return "minors";
        case Suite::symmetric: return "symmetric";
        case Suite::all: return "all";
    }
    return "?";
}

template <ExactField S>
VerificationReport run_suite(const SextupleSystem<S>& sys, Suite suite) {
    VerificationReport report;
    if (wants(suite, Suite::kernel)) kernel_suite(sys, report);
    if (wants(suite, Suite::okada)) okada_suite(sys, report);
    if (wants(suite, Suite::minors)) minors_suite(sys, report);
    if (suite == Suite::symmetric) report.skip("symmetric_suite", "instance is not symmetric");
    return report;
}

template <ExactField S>
VerificationReport run_suite(const SymmetricSystem<S>& sym, Suite suite) {
    VerificationReport report;
    if (wants(suite, Suite::symmetric)) symmetric_suite(sym, report);
    if (suite != Suite::symmetric) report.merge(run_suite(lift(sym), suite));
    return report;
}

template VerificationReport run_suite(const SextupleSystem<Rational>&, Suite);
template VerificationReport run_suite(const SextupleSystem<Fp>&, Suite);
template VerificationReport run_suite(const SymmetricSystem<Rational>&, Suite);
template VerificationReport run_suite(const SymmetricSystem<Fp>&, Suite);

namespace {

template <ExactField S>
void check_stored_kernel(const SextupleSystem<S>& sys, const InstanceFile& file, VerificationReport& report) {
    if (!file.kernel) return;
    const auto k = kernel_matrix(sys, sys.n() + 1);
    for (Index i = 0; i < k.rows(); ++i) {
        for (Index j = 0; j < k.cols(); ++j) {
            const std::string& stored = (*file.kernel)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            bool same = false;
            try {
                S value;
                if constexpr (std::same_as<S, Fp>) {
                    value = project_mod_p(Rational::parse(stored), file.field.prime);
                } else {
                    value = Rational::parse(stored);
                }
                same = (value == k(i, j));
            } catch (const Error&) {
            }
            if (!same) {
                report.fail("stored_kernel", {{"entry", "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"},
                                              {"stored", stored},
                                              {"recomputed", to_string(k(i, j))}});
                return;
            }
        }
    }
    report.pass("stored_kernel");
}

template <typename System>
VerificationReport verify_system(const System& sys, const InstanceFile& file, const VerifyOptions& options) {
    using S = typename System::Scalar;
    VerificationReport report;
    const std::string own_field = file.field.is_rational() ? "Q" : "p=" + std::to_string(file.field.prime);

    VerificationReport own;
    if constexpr (std::same_as<System, SextupleSystem<S>>) {
        check_stored_kernel(sys, file, own);
    } else {
        check_stored_kernel(lift(sys), file, own);
    }
    own.merge(run_suite(sys, options.suite));
    report.merge(own, own_field, 0);

    if constexpr (std::same_as<S, Rational>) {
        std::mt19937_64 rng(options.seed);
        std::map<std::string, Verdict> reference;
        for (const auto& r : own.records()) {
            if (r.identity != "stored_kernel") reference.emplace(r.identity, r.verdict);
        }
        std::vector<Witness> mismatches;
        for (unsigned t = 0; t < options.primes; ++t) {
            VerificationReport mod;
            std::uint64_t p = 0;
            for (int attempt = 0;; ++attempt) {
                p = random_prime(rng);
                try {
                    mod = run_suite(project_mod_p(sys, p), options.suite);
                    break;
                } catch (const BadReduction&) {
                    if (attempt > 100) throw;
                }
            }
            for (const auto& r : mod.records()) {
                const auto it = reference.find(r.identity);
                if (it == reference.end()) continue;
                if (it->second == Verdict::skipped || r.verdict == Verdict::skipped) continue;
                if (it->second != r.verdict) mismatches.push_back({r.identity + "@p=" + std::to_string(p), to_string(r.verdict)});
            }
            report.merge(mod, "p=" + std::to_string(p), 0);
        }
        if (options.primes > 0) {
            if (mismatches.empty()) {
                report.pass("verdict_consistency");
            } else {
                report.fail("verdict_consistency", std::move(mismatches));
            }
        }
    }
    return report;
}

}  // namespace

VerificationReport verify_instance(const InstanceFile& file, const VerifyOptions& options) {
    return std::visit([&](const auto& sys) { return verify_system(sys, file, options); }, file.system);
}

VerificationReport verify_batch(const BatchOptions& options) {
    const unsigned threads =
        std::max(1U, std::min(options.trials, options.threads != 0 ? options.threads : std::thread::hardware_concurrency()));
    std::vector<VerificationReport> per_trial(options.trials);
    std::atomic<unsigned> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (unsigned t = next++; t < options.trials; t = next++) {
            try {
                const std::uint64_t seed = split_seed(options.master_seed, t);
                const auto file = generate_instance(options.mode, options.n, seed, options.range, FieldSpec{});
                VerifyOptions v = options.verify;
                v.seed = split_seed(seed, 0x9e37);
                per_trial[t].merge(verify_instance(file, v));
                for (auto& r : per_trial[t].records()) r.trial = t;
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    VerificationReport report;
    for (const auto& r : per_trial) report.merge(r);
    report.sort_records();
    return report;
}

}  // namespace repdet

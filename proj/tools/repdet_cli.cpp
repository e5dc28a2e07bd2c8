// repdet: generate, verify, time and evaluate kernel-determinant instances.
//
// Exit codes: 0 success / all identities pass, 1 an identity failed,
// 2 invalid input (including generation running out of attempts).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repdet/bench.hpp"
#include "repdet/suite.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw repdet::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw repdet::ParseError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel-determinant identities: instance generation, verification and benchmarks"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a seeded random instance file");
    std::string gen_mode = "general";
    long long gen_n = 1;
    std::uint64_t gen_seed = 0;
    long long gen_range = 20;
    std::string gen_field = "rational";
    std::string gen_out = "-";
    gen->add_option("--mode", gen_mode, "general | symmetric")->check(CLI::IsMember({"general", "symmetric"}));
    gen->add_option("--n", gen_n, "order n (kernel is (n+1)x(n+1))")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--range", gen_range, "parameters drawn from [-R, R]");
    gen->add_option("--field", gen_field, "rational | prime:P");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify an instance file (or a generated batch)");
    std::string verify_file;
    std::string verify_suite = "all";
    unsigned verify_primes = 3;
    std::uint64_t verify_seed = 0x7e57;
    unsigned verify_trials = 0;
    std::string verify_mode = "general";
    long long verify_n = 1;
    long long verify_range = 20;
    unsigned verify_threads = 0;
    bool verify_json = false;
    verify->add_option("file", verify_file, "instance file");
    verify->add_option("--suite", verify_suite, "kernel | okada | minors | symmetric | all")
        ->check(CLI::IsMember({"kernel", "okada", "minors", "symmetric", "all"}));
    verify->add_option("--primes", verify_primes, "random 62-bit primes per rational instance");
    verify->add_option("--seed", verify_seed, "prime sampling seed; master seed in batch mode");
    verify->add_option("--trials", verify_trials, "batch mode: generate and verify T instances");
    verify->add_option("--mode", verify_mode, "batch mode: general | symmetric")
        ->check(CLI::IsMember({"general", "symmetric"}));
    verify->add_option("--n", verify_n, "batch mode: order n");
    verify->add_option("--range", verify_range, "batch mode: parameter range");
    verify->add_option("--threads", verify_threads, "batch mode: worker threads (0 = hardware)");
    verify->add_flag("--json", verify_json, "print the report as JSON");

    // bench
    auto* bench = app.add_subcommand("bench", "Time the determinant engines");
    std::vector<long long> bench_sizes{4, 6, 8};
    unsigned bench_reps = 5;
    std::uint64_t bench_seed = 1;
    std::string bench_json_path;
    bench->add_option("--sizes", bench_sizes, "kernel dimensions")->delimiter(',');
    bench->add_option("--reps", bench_reps, "repetitions per engine (median reported)");
    bench->add_option("--seed", bench_seed, "instance seed");
    bench->add_option("--json", bench_json_path, "also write machine-readable rows to this file ('-' for stdout)");

    // det
    auto* det = app.add_subcommand("det", "Print D_{n+1} of an instance");
    std::string det_file;
    det->add_option("file", det_file, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*gen) {
            const auto file = repdet::generate_instance(repdet::parse_mode(gen_mode), gen_n, gen_seed, gen_range,
                                                        repdet::FieldSpec::parse(gen_field));
            write_output(gen_out, repdet::serialize(file));
            return 0;
        }
        if (*verify) {
            repdet::VerifyOptions options{repdet::parse_suite(verify_suite), verify_primes, verify_seed};
            repdet::VerificationReport report;
            if (verify_trials > 0) {
                if (!verify_file.empty()) throw repdet::ParseError("give either a file or --trials, not both");
                repdet::BatchOptions batch;
                batch.mode = repdet::parse_mode(verify_mode);
                batch.n = verify_n;
                batch.master_seed = verify_seed;
                batch.range = verify_range;
                batch.trials = verify_trials;
                batch.threads = verify_threads;
                batch.verify = options;
                report = repdet::verify_batch(batch);
            } else {
                if (verify_file.empty()) throw repdet::ParseError("verify needs an instance file or --trials");
                report = repdet::verify_instance(repdet::deserialize(read_file(verify_file)), options);
            }
            std::cout << (verify_json ? report.to_json() + "\n" : report.to_text());
            return report.passed() ? 0 : kExitFail;
        }
        if (*bench) {
            std::vector<repdet::Index> sizes(bench_sizes.begin(), bench_sizes.end());
            const auto rows = repdet::run_bench(sizes, bench_reps, bench_seed);
            std::cout << repdet::bench_table(rows);
            if (!bench_json_path.empty()) write_output(bench_json_path, repdet::bench_json(rows));
            return 0;
        }
        if (*det) {
            std::cout << repdet::kernel_determinant_text(repdet::deserialize(read_file(det_file))) << "\n";
            return 0;
        }
    } catch (const repdet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

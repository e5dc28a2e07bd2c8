#include <doctest.h>

#include <unistd.h>

#include "cli_runner.hpp"

namespace {

const char* kS1 =
    R"({"schema":"1","mode":"general","n":1,"field":"rational","left":[["1","1","0"],["1","3","2"]],"right":[["1","2","1"],["1","1","3"]]})";
const char* kS2 = R"({"schema":"1","mode":"symmetric","n":1,"field":"rational","triplets":[["1","1","1"],["1","3","2"]]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("S1 and S2 files") {
    const auto dir = cli::scratch_dir("repdet_cli_examples");
    cli::write(dir / "s1.json", kS1);
    cli::write(dir / "s2.json", kS2);
    const auto v1 = cli::run("verify " + (dir / "s1.json").string());
    CHECK(v1.code == 0);
    CHECK(v1.out.find("aggregate: pass") != std::string::npos);
    CHECK(cli::run("verify " + (dir / "s2.json").string() + " --suite symmetric").code == 0);
    const auto d = cli::run("det " + (dir / "s2.json").string());
    CHECK(d.code == 0);
    CHECK(d.out == "-5/18\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("gen is byte-deterministic") {
    const auto dir = cli::scratch_dir("repdet_cli_gen");
    const auto a = dir / "a.json", b = dir / "b.json";
    CHECK(cli::run("gen --mode symmetric --n 3 --seed 2 --range 20 --field rational -o " + a.string()).code == 0);
    CHECK(cli::run("gen --mode symmetric --n 3 --seed 2 --range 20 --field rational -o " + b.string()).code == 0);
    CHECK(cli::read(a) == cli::read(b));
    CHECK(cli::run("gen --n 2 --seed 3 --range 1 -o " + a.string()).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("invalid input exits 2") {
    const auto dir = cli::scratch_dir("repdet_cli_bad");
    cli::write(dir / "dup.json",
               R"({"schema":"1","mode":"general","n":1,"field":"rational","left":[["1","1","0"],["1","3","2"]],"right":[["1","2","1"],["1","1","1"]]})");
    const auto r = cli::run("verify " + (dir / "dup.json").string());
    CHECK(r.code == 2);
    CHECK(r.out.find("duplicate l") != std::string::npos);
    CHECK(cli::run("verify " + (dir / "missing.json").string()).code == 2);
    CHECK(cli::run("verify --suite nonsense " + (dir / "dup.json").string()).code == 2);
    CHECK(cli::run("frobnicate").code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("batch mode and bench") {
    const auto batch = cli::run("verify --trials 4 --n 2 --seed 5");
    CHECK(batch.code == 0);
    CHECK(batch.out.find("trial 3") != std::string::npos);
    const auto dir = cli::scratch_dir("repdet_cli_bench");
    const auto b = cli::run("bench --sizes 4,6 --reps 2 --seed 1 --json " + (dir / "b.json").string());
    CHECK(b.code == 0);
    CHECK(b.out.find("multimodular") != std::string::npos);
    CHECK(cli::read(dir / "b.json").find("\"det_by_bordering\"") != std::string::npos);
    std::filesystem::remove_all(dir);
}

}

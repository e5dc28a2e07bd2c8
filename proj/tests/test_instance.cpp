#include <doctest.h>

#include <random>

#include "repdet/suite.hpp"

using namespace repdet;

TEST_SUITE("instance") {

TEST_CASE("gen produces valid, deterministic files") {
    const auto a = generate_instance(Mode::general, 1, 1, 20, FieldSpec{});
    CHECK(std::holds_alternative<SextupleSystem<Rational>>(a.system));
    CHECK(serialize(a) == serialize(generate_instance(Mode::general, 1, 1, 20, FieldSpec{})));
    CHECK(serialize(a) != serialize(generate_instance(Mode::general, 1, 2, 20, FieldSpec{})));
    const auto s = generate_instance(Mode::symmetric, 3, 2, 20, FieldSpec{});
    CHECK(std::holds_alternative<SymmetricSystem<Rational>>(s.system));
    CHECK(s.n() == 3);
    CHECK_THROWS_AS(generate_instance(Mode::general, 2, 3, 1, FieldSpec{}), GenerationFailed);
}

TEST_CASE("round trip preserves every scalar") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const Mode mode : {Mode::general, Mode::symmetric}) {
            for (const auto& field : {FieldSpec{}, FieldSpec::parse("prime:1000003")}) {
                const auto f = generate_instance(mode, static_cast<Index>(seed % 5), seed, 20, field);
                const std::string text = serialize(f);
                const auto back = deserialize(text);
                CHECK(back.system == f.system);
                CHECK(back.kernel == f.kernel);
                CHECK(back.provenance == f.provenance);
                CHECK(back.field == f.field);
                CHECK(serialize(back) == text);
            }
        }
    }
}

TEST_CASE("large rationals survive") {
    const Rational big = Rational::parse("-123456789012345678901234567890/98765432109876543210987");
    SextupleSystem<Rational> sys({{big, Rational(1), Rational(0)}}, {{Rational(2), big, Rational(1)}});
    const InstanceFile f{Mode::general, FieldSpec{}, sys, std::nullopt, std::nullopt};
    CHECK(deserialize(serialize(f)).system == f.system);
}

TEST_CASE("malformed files are rejected") {
    const std::string good = serialize(generate_instance(Mode::general, 1, 4, 20, FieldSpec{}));
    CHECK_NOTHROW(deserialize(good));
    CHECK_THROWS_AS(deserialize("{"), ParseError);
    CHECK_THROWS_AS(deserialize("[]"), ParseError);
    CHECK_THROWS_AS(deserialize(R"({"schema":"2","mode":"general","n":0,"field":"rational","left":[["1","1","0"]],"right":[["1","1","1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(deserialize(R"({"schema":"1","mode":"general","n":0,"field":"rational","left":[[1,1,0]],"right":[["1","1","1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(deserialize(R"({"schema":"1","mode":"general","n":1,"field":"rational","left":[["1","1","0"]],"right":[["1","1","1"]]})"),
                    ParseError);
    CHECK_THROWS_AS(deserialize(R"({"schema":"1","mode":"general","n":0,"field":"prime:12","left":[["1","1","0"]],"right":[["1","1","1"]]})"),
                    ParseError);
    // l_2 duplicates l_1
    CHECK_THROWS_AS(
        deserialize(R"({"schema":"1","mode":"general","n":1,"field":"rational","left":[["1","1","0"],["1","3","2"]],"right":[["1","2","1"],["1","1","1"]]})"),
        InvalidSystem);
}

TEST_CASE("det text") {
    const auto f = deserialize(
        R"({"schema":"1","mode":"general","n":1,"field":"rational","left":[["1","1","0"],["1","3","2"]],"right":[["1","2","1"],["1","1","3"]]})");
    CHECK(kernel_determinant_text(f) == "-2");
    const auto s = deserialize(R"({"schema":"1","mode":"symmetric","n":1,"field":"rational","triplets":[["1","1","1"],["1","3","2"]]})");
    CHECK(kernel_determinant_text(s) == "-5/18");
}

TEST_CASE("verification reports") {
    const auto f = generate_instance(Mode::general, 2, 9, 20, FieldSpec{});
    const auto r = verify_instance(f, VerifyOptions{});
    CHECK(r.passed());
    CHECK(r.to_text() == verify_instance(f, VerifyOptions{}).to_text());
    auto broken = f;
    (*broken.kernel)[0][1] = "12345/7";
    const auto rb = verify_instance(broken, VerifyOptions{});
    CHECK_FALSE(rb.passed());
    CHECK(rb.to_text().find("stored=12345/7") != std::string::npos);
}

TEST_CASE("batch records are ordered and independent of thread count") {
    BatchOptions b;
    b.n = 2;
    b.trials = 6;
    b.master_seed = 77;
    b.threads = 1;
    const auto one = verify_batch(b);
    b.threads = 3;
    const auto three = verify_batch(b);
    CHECK(one.passed());
    REQUIRE(one.records().size() == three.records().size());
    for (std::size_t i = 0; i < one.records().size(); ++i) {
        CHECK(one.records()[i].identity == three.records()[i].identity);
        CHECK(one.records()[i].trial == three.records()[i].trial);
        CHECK(one.records()[i].field == three.records()[i].field);
    }
}

}

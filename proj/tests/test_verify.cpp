#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sps/verify.hpp"

using namespace sps;

TEST_CASE("every suite passes a smoke run on a small zoo") {
    for (const char* alg : {"complex:2", "spin:3"}) {
        AlgebraDescriptor d = AlgebraDescriptor::parse(alg);
        for (const auto& s : suite_catalog()) {
            auto rep = run_suite(s.name, d, 5, 1);
            INFO(s.name, " on ", alg);
            for (const auto& f : rep.failures)
                MESSAGE(f.predicate, " violation=", f.violation);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("reports are deterministic up to elapsed time") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    auto r1 = run_suite("axioms", d, 5, 42);
    auto r2 = run_suite("axioms", d, 5, 42);
    auto j1 = r1.to_json();
    auto j2 = r2.to_json();
    j1.erase("elapsed_s");
    j2.erase("elapsed_s");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("different seeds explore different samples") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    Rng a = substream(1, 0);
    Rng b = substream(2, 0);
    CHECK(a() != b());
}

TEST_CASE("json schema exposes the fixed field set in order") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("spin:3");
    auto j = run_suite("spectral", d, 2, 0).to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"suite", "algebra", "seed", "samples", "pass",
                                           "failures", "elapsed_s"});
    CHECK(j["algebra"] == "spin:3");
    CHECK(j["samples"] == 2);
    CHECK(j["failures"].is_array());
}

TEST_CASE("zero samples pass vacuously") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("quat:2");
    for (const auto& s : suite_catalog()) {
        if (s.name == "loctom") continue;  // runs classification facts regardless
        auto rep = run_suite(s.name, d, 0, 0);
        CHECK(rep.pass);
        CHECK(rep.samples == 0);
    }
}

TEST_CASE("unknown suites are rejected") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("real:2");
    CHECK_THROWS_AS(run_suite("nonsense", d, 1, 0), Error);
}

TEST_CASE("the default zoo holds the expected descriptors") {
    auto zoo = default_zoo();
    REQUIRE(zoo.size() == 8);
    CHECK(zoo.front().to_string() == "real:2");
    CHECK(zoo.back().to_string() == "complex:2+spin:3");
}

TEST_CASE("continuity probe stays finite") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("complex:2");
    double c = continuity_probe(d, 10, 3);
    CHECK(std::isfinite(c));
    CHECK(c >= 0.0);
}

TEST_CASE("failure records carry hex witnesses") {
    AlgebraDescriptor d = AlgebraDescriptor::parse("real:2");
    Rng rng(1);
    Element a = random_element(d, rng);
    std::string h = hex_coords(a);
    CHECK(h.front() == '[');
    CHECK(h.back() == ']');
    CHECK(h.find("0x") != std::string::npos);
}

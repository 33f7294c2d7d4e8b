#include <doctest.h>

#include "lva/harness.hpp"

using namespace lva;

TEST_SUITE("harness") {

TEST_CASE("random_element basics") {
    auto a1 = Lattice::make({{2}});
    FockElement flat = random_element(a1, zero_vector(1), 0, 42);
    CHECK(flat.terms().size() <= 5);
    for (auto& [key, c] : flat.terms()) {
        CHECK(key.first.empty());  // degree 0: pure charge vectors
        CHECK(denominator(c) == 1);
    }

    FockElement a = random_element(a1, zero_vector(1), 3, 1);
    FockElement b = random_element(a1, zero_vector(1), 3, 1);
    CHECK(a == b);
    CHECK(a.max_degree() <= 3);
    CHECK(integrality_check(a).integral);
    CHECK_FALSE(a == random_element(a1, zero_vector(1), 3, 2));

    LatticeVector half{Rational(1, 2)};
    FockElement m = random_element(a1, half, 2, 9);
    for (auto& [key, c] : m.terms())
        CHECK(denominator(key.second[0]) == 2);
}

TEST_CASE("run_suite rejects odd lattices") {
    SuiteConfig cfg = SuiteConfig::preset_default(1);
    cfg.grams = {{{1}}};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("run_suite is deterministic and passes on a small config") {
    SuiteConfig cfg;
    cfg.grams = {{{2}}};
    cfg.max_degree = 2;
    cfg.max_r = 2;
    cfg.mode_lo = -2;
    cfg.mode_hi = 2;
    cfg.include_cosets = false;
    cfg.seed = 11;
    cfg.case_count = 2;
    cfg.primes = {2, 3};

    Report r1 = run_suite(cfg);
    Report r2 = run_suite(cfg);
    CHECK(r1.all_passed);
    CHECK(r1.json_text == r2.json_text);
    CHECK_FALSE(r1.summaries.empty());
    int total = 0;
    for (auto& s : r1.summaries) {
        CHECK(s.failed == 0);
        total += s.passed;
    }
    CHECK(total > 0);
    CHECK(r1.json_text.find("\"schema_version\"") != std::string::npos);
}

} // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "harness.hpp"
#include "polynomial.hpp"
#include "rng.hpp"

using namespace gcdval;

TEST_CASE("random monic generation respects the bounds") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        IntPolynomial f = random_monic(rng, 3, 8);
        CHECK(f.is_monic());
        CHECK(f.degree() >= 1);
        CHECK(f.degree() <= 3);
        for (long i = 0; i < f.degree(); ++i) {
            CHECK(abs(f.coefficient(i)) <= 8);
        }
    }
}

TEST_CASE("pair checks on a non-squarefree resultant") {
    PairChecks checks =
        check_pair(parse_poly("x^2+1"), parse_poly("x^2-1"), 8);
    CHECK(checks.ok());
    CHECK(checks.divides_resultant.applicable);
    CHECK(checks.divides_resultant.ok);
    // r = 4: not squarefree, and 2^2 | r disables the coprime guarantee
    CHECK_FALSE(checks.squarefree_range.applicable);
    CHECK_FALSE(checks.coprime_reachable.applicable);
    // |r| = 4 is not attained (range is {1, 2}), so closure does not apply
    CHECK_FALSE(checks.divisor_closure.applicable);
    CHECK(checks.bounds_slack.applicable);
    CHECK(checks.bounds_slack.ok);
}

TEST_CASE("pair checks on a squarefree resultant") {
    PairChecks checks = check_pair(parse_poly("x"), parse_poly("x-6"), 8);
    CHECK(checks.ok());
    CHECK(checks.squarefree_range.applicable);
    CHECK(checks.squarefree_range.ok);
    CHECK(checks.coprime_reachable.applicable);
    CHECK(checks.coprime_reachable.ok);
    CHECK(checks.divisor_closure.applicable);
    CHECK(checks.divisor_closure.ok);
}

TEST_CASE("suite passes and is deterministic") {
    SuiteReport a = random_property_suite(1, 10, 2, 3);
    CHECK(a.all_passed());
    CHECK(a.completed == 10);
    CHECK_FALSE(a.first_failure.has_value());

    SuiteReport b = random_property_suite(1, 10, 2, 3);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].first == b.checks[i].first);
        CHECK(a.checks[i].second.passed == b.checks[i].second.passed);
        CHECK(a.checks[i].second.failed == b.checks[i].second.failed);
    }

    unsigned long divides_passed = 0;
    for (const auto& [name, stats] : a.checks) {
        CHECK(stats.failed == 0);
        if (name == "divides_resultant") divides_passed = stats.passed;
    }
    CHECK(divides_passed == 10);  // unconditional check runs on every trial
}

TEST_CASE("suite writes one csv row per trial") {
    std::string path = "harness_test_trials.csv";
    SuiteReport report = random_property_suite(7, 5, 2, 3, path);
    CHECK(report.all_passed());

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "trial,f,g,resultant,ok");
    unsigned long rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == report.completed);
    in.close();
    std::remove(path.c_str());
}

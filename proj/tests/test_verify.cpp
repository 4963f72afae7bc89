#include <doctest.h>

#include <stdexcept>

#include "stammerlab/verify.hpp"

using namespace stammerlab;

TEST_CASE("every suite passes at small sizes") {
    for (const std::string& suite : suite_names()) {
        if (suite == "all") continue;
        VerifyReport rep = run_suite(suite, 3);
        CHECK(rep.suite == suite);
        REQUIRE(!rep.checks.empty());
        for (const CheckResult& c : rep.checks) {
            INFO(suite, ": ", c.name, ": ", c.details);
            CHECK(c.passed);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("the combined suite aggregates everything") {
    VerifyReport rep = run_suite("all", 2);
    CHECK(rep.checks.size() >= 10);
    CHECK(rep.passed());
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("bogus", 3), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("counts", -1), std::invalid_argument);
}

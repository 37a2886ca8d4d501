#include <catch2/catch_amalgamated.hpp>

#include "cqsl2/verify.hpp"

using namespace cqsl2;

TEST_CASE("suite registry") {
    auto names = suite_names();
    REQUIRE(names.size() == 14);  // 13 areas plus "all"
    REQUIRE(names.back() == "all");
    for (const auto& n : names) {
        if (n == "r7-spot-dims") {
            REQUIRE(suite_supported_r(n, false).empty());
            REQUIRE(suite_supported_r(n, true) == std::vector<int>{7});
            continue;
        }
        REQUIRE(!suite_supported_r(n, false).empty());
    }
}

TEST_CASE("suites reject unsupported roots") {
    Engine eng(5);
    REQUIRE_THROWS(run_suite(eng, "table1", false));
    REQUIRE_THROWS(run_suite(eng, "no-such-suite", false));
}

TEST_CASE("cheap suites pass end to end") {
    Engine eng(3);
    SuiteRun run = run_suite(eng, "exterior-dims", false);
    REQUIRE(run.all_pass());
    REQUIRE(run.results.size() == 3);
    SuiteRun table = run_suite(eng, "table1", false);
    REQUIRE(table.all_pass());
}

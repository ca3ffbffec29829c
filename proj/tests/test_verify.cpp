#include <doctest.h>

#include "errors.hpp"
#include "verify.hpp"

using namespace monocyc;

namespace {

nlohmann::ordered_json stable_json(const SweepReport& rep) {
    auto j = sweep_report_to_json(rep);
    j.erase("wall_ms");
    return j;
}

} // namespace

TEST_CASE("suites run clean at reduced bounds") {
    for (const auto& name : suite_names()) {
        SweepReport rep = run_suite(name, name == "condition-c" ? 600 : 30);
        CAPTURE(name);
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("thread fan-out leaves the report unchanged") {
    for (const auto& name : {"products", "condition-c", "discs"}) {
        SweepReport lone = run_suite(name, 40, 1);
        SweepReport fan = run_suite(name, 40, 4);
        CHECK(stable_json(lone) == stable_json(fan));
    }
}

TEST_CASE("splitter seed does not change any verdict") {
    SweepReport a = run_suite("dedekind", 45, 1, 1);
    SweepReport b = run_suite("dedekind", 45, 1, 987654321);
    CHECK(stable_json(a) == stable_json(b));
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS((void)run_suite("bogus"), Error);
    CHECK_THROWS_AS((void)suite_default_max("bogus"), Error);
}

TEST_CASE("suite catalogue") {
    const auto& names = suite_names();
    REQUIRE(names.size() == 9);
    CHECK(suite_default_max("products") == 200);
    CHECK(suite_default_max("condition-c") == 20000);
}

#include <doctest.h>

#include "property_suites.hpp"

using namespace hochbv;

TEST_SUITE("properties") {

TEST_CASE("d-squared-zero") {
    auto r = props::run_property("d-squared-zero", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("b-squared-zero") {
    auto r = props::run_property("b-squared-zero", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("cup-leibniz") {
    auto r = props::run_property("cup-leibniz", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("ch-compatibility") {
    auto r = props::run_property("ch-compatibility", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("z-chain-map") {
    auto r = props::run_property("z-chain-map", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("pullback-square") {
    auto r = props::run_property("pullback-square", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

TEST_CASE("structural-vs-evaluative") {
    auto r = props::run_property("structural-vs-evaluative", 250);
    INFO(r.detail);
    CHECK(r.pass);
    CHECK(r.cases >= 200);
}

} // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotwist/engine.hpp"

using namespace cotwist;

namespace {

const char* kDemo = R"(# two-torus with the standard antisymmetric matrix
torus 2 theta [[0,-1/2],[1/2,0]]
gen z1s deg (-1,0) star z1
gen z1 deg (1,0) star z1s
gen z2s deg (1,0) star z2
gen z2 deg (-1,0) star z2s
gen z3s deg (0,-1) star z3
gen z3 deg (0,1) star z3s
gen r2 deg (0,0) star r2 central
gen r2i deg (0,0) star r2i central
rule r2 r2i -> 1
elem a = 1/2 * z1 z3 + mu * z2
elem ab = z3 z1
coaction adj z1 (1,0) z1s (-1,0) z3 (0,1) z3s (0,-1)
check normalizes-to ab mu * z1 z3
check coaction adj
check coinvariants adj 2
matrix M 2 2 = [1, 0; 0, 1]
check projection M
check unitary M
)";

}  // namespace

TEST_CASE("scenario parse / render round trip") {
    Scenario s = parse_scenario(kDemo);
    CHECK(s.gens.size() == 8);
    CHECK(s.rules.size() == 1);
    CHECK(s.elems.size() == 2);
    CHECK(s.checks.size() == 5);
    Scenario again = parse_scenario(render_scenario(s));
    CHECK(s == again);
}

TEST_CASE("scenario runtime executes checks") {
    EngineOptions opt;
    RunReport report = run_scenario(parse_scenario(kDemo), opt);
    INFO(report.text());
    CHECK(report.all_passed());
}

TEST_CASE("reports are byte-identical across parallelism degrees") {
    EngineOptions opt1, opt4;
    opt4.jobs = 4;
    Scenario s = parse_scenario(kDemo);
    RunReport a = run_scenario(s, opt1);
    RunReport b = run_scenario(s, opt4);
    CHECK(a.text() == b.text());
    CHECK(a.json() == b.json());
}

TEST_CASE("parse errors carry line positions") {
    CHECK_THROWS_AS(parse_scenario("bogus directive\n"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("gen x deg\n"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("torus 2 theta [[0,1],[1,0]]\n"), std::exception);
    try {
        parse_scenario("torus 2 theta [[0,-1/2],[1/2,0]]\nnonsense\n");
        CHECK(false);
    } catch (const ScenarioError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("semantic errors: undeclared generators and bad checks") {
    EngineOptions opt;
    CHECK_THROWS_AS(run_scenario(parse_scenario("gen x deg (1,0) star y\n"), opt),
                    ScenarioError);
    CHECK_THROWS_AS(
        run_scenario(parse_scenario("torus 2 theta [[0,-1/2],[1/2,0]]\ncheck frobnicate\n"), opt),
        ScenarioError);
    // Failing check surfaces as a failed result, not an exception.
    const char* bad = "torus 2 theta [[0,-1/2],[1/2,0]]\n"
                      "gen x deg (1,0) star xs\ngen xs deg (-1,0) star x\n"
                      "elem e = x\ncheck normalizes-to e xs\n";
    RunReport report = run_scenario(parse_scenario(bad), opt);
    CHECK(!report.all_passed());
}

TEST_CASE("built-in cocycle suite through the engine") {
    EngineOptions opt;
    RunReport report = run_suite("cocycle", {}, opt);
    CHECK(report.all_passed());
    CHECK(report.results.size() == 4);
}

TEST_CASE("classical flag zeroes the deformation") {
    EngineOptions opt;
    opt.classical = true;
    RunReport report = run_suite("sphere7", {}, opt);
    CHECK(report.all_passed());
}

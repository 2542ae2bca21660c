#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "spherigon/tolerances.hpp"
#include "spherigon/verify.hpp"

using namespace spherigon;
using nlohmann::json;

namespace {

SweepGrid tiny_grid() {
    SweepGrid g;
    g.lambda_values = {1.0};
    g.n_values = {3, 5};
    g.omega_values = {std::atan(1.0)};
    g.seeds = {1};
    g.mc_samples = 20000;
    return g;
}

const CheckRecord* find_check(const VerificationReport& r, const std::string& claim) {
    for (const CheckRecord& c : r.checks)
        if (c.claim == claim)
            return &c;
    return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("default grid shape") {
    SweepGrid g = SweepGrid::defaults();
    CHECK(g.lambda_values == std::vector<double>{0.25, 1.0, 4.0});
    CHECK(g.n_values == std::vector<int>{3, 5, 7, 9, 101});
    REQUIRE(g.omega_values.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        CHECK(std::abs(g.omega_values[i] - std::atan(g.lambda_values[i])) < 1e-15);
    CHECK(g.seeds.size() == 3);
    CHECK(g.mc_samples == 200000);
    g.validate();
}

TEST_CASE("grid validation") {
    SweepGrid g = tiny_grid();
    g.n_values = {4};
    CHECK_THROWS_AS(g.validate(), EvenGon);
    g = tiny_grid();
    g.omega_values = {1.6};
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = tiny_grid();
    g.omega_values = {0.0};
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = tiny_grid();
    g.lambda_values.clear();
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = tiny_grid();
    g.seeds.clear();
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = tiny_grid();
    g.mc_samples = 0;
    CHECK_THROWS_AS(g.validate(), InvalidSampleCount);
    g = tiny_grid();
    g.n_values = {1};
    CHECK_THROWS_AS(g.validate(), DomainError);
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_verification("bogus", tiny_grid()), DomainError);
}

TEST_CASE("scalars suite passes on the tiny grid") {
    VerificationReport r = run_verification("scalars", tiny_grid());
    CHECK(r.overall_pass);
    CHECK(r.suite == "scalars");
    CHECK(r.checks.size() >= 8);
    for (const CheckRecord& c : r.checks) {
        CHECK(c.passed);
        CHECK(c.margin >= 0.0);
        CHECK(c.tolerance > 0.0);
        CHECK(std::isfinite(c.margin));
        CHECK_FALSE(c.reference.empty());
        CHECK_FALSE(c.statement.empty());
    }
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckRecord& a, const CheckRecord& b) {
                             return a.claim < b.claim;
                         }));
}

TEST_CASE("all = scalars + polygons + theorems") {
    VerificationReport all = run_verification("all", tiny_grid());
    VerificationReport s = run_verification("scalars", tiny_grid());
    VerificationReport p = run_verification("polygons", tiny_grid());
    VerificationReport t = run_verification("theorems", tiny_grid());
    CHECK(all.overall_pass);
    CHECK(p.overall_pass);
    CHECK(t.overall_pass);
    CHECK(all.checks.size() == s.checks.size() + p.checks.size() + t.checks.size());
}

TEST_CASE("thread count does not change any result") {
    VerifyOptions serial;
    serial.threads = 1;
    VerifyOptions parallel;
    parallel.threads = 4;
    VerificationReport a = run_verification("polygons", tiny_grid(), serial);
    VerificationReport b = run_verification("polygons", tiny_grid(), parallel);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].claim == b.checks[i].claim);
        CHECK(a.checks[i].margin == b.checks[i].margin);  // bit-identical
        CHECK(a.checks[i].passed == b.checks[i].passed);
    }
}

TEST_CASE("the girard bias hook is caught by the agreement check") {
    VerifyOptions opt;
    opt.girard_bias = 1e-3;
    VerificationReport r = run_verification("theorems", tiny_grid(), opt);
    CHECK_FALSE(r.overall_pass);
    const CheckRecord* agreement = find_check(r, "area-formula-agreement");
    REQUIRE(agreement != nullptr);
    CHECK_FALSE(agreement->passed);
    CHECK(agreement->margin < 0.0);
}

TEST_CASE("report serialization: json") {
    VerificationReport r = run_verification("scalars", tiny_grid());
    json j = json::parse(report_to_json(r));
    CHECK(j["format"] == "spherigon-report/1");
    CHECK(j["suite"] == "scalars");
    CHECK(j["overall_pass"] == true);
    REQUIRE(j["checks"].size() == r.checks.size());
    CHECK(j["checks"][0]["claim"] == r.checks[0].claim);
    CHECK(j["checks"][0].contains("reference"));
    CHECK(j["checks"][0].contains("margin"));
    CHECK(j["checks"][0].contains("tolerance"));
    CHECK(j["grid"]["mc_samples"] == 20000);
}

TEST_CASE("report serialization: csv") {
    VerificationReport r = run_verification("scalars", tiny_grid());
    std::string csv = report_to_csv(r);
    std::istringstream is(csv);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("claim,", 0) == 0);
    size_t rows = 0;
    while (std::getline(is, line))
        if (!line.empty())
            ++rows;
    CHECK(rows == r.checks.size());
}

}  // TEST_SUITE

#include <doctest.h>

#include "unicyclic/errors.hpp"
#include "unicyclic/extremal.hpp"
#include "unicyclic/verification.hpp"

using namespace unicyclic;

namespace {

const CellSummary* find_cell(const VerifyReport& r, std::string_view id, std::string_view param, int n,
                             std::optional<int> d = std::nullopt, std::optional<int> p = std::nullopt) {
  for (const auto& c : r.cells) {
    if (c.bound_id == id && c.param == param && c.n == n && c.max_degree == d && c.pendants == p) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("verification") {
  TEST_CASE("full run is clean") {
    VerifyOptions opts;
    opts.n_min = 4;
    opts.n_max = 7;
    const auto report = run_verification(opts);
    CHECK(report.graphs == 2 + 5 + 13 + 33);
    CHECK(report.clean());
    CHECK(report.violations() == 0);
    CHECK(report.mismatches() == 0);
    CHECK(report.unattained() == 0);
    const auto* m1 = find_cell(report, "cor-M1-Delta-upper", "-", 7, 3);
    REQUIRE(m1 != nullptr);
    CHECK(m1->graphs == 16);
    CHECK(m1->tight == 3);
    CHECK(m1->members == 3);
    CHECK(m1->complete);
    const auto* uni = find_cell(report, "cor-M1-uni-lower", "-", 6);
    REQUIRE(uni != nullptr);
    CHECK(uni->graphs == 13);
    CHECK(uni->tight == 1);
  }

  TEST_CASE("thread count does not change the result") {
    VerifyOptions one;
    one.n_min = 6;
    one.n_max = 7;
    one.jobs = 1;
    VerifyOptions many = one;
    many.jobs = 4;
    CHECK(render_tabular(run_verification(one)) == render_tabular(run_verification(many)));
  }

  TEST_CASE("max-degree filter") {
    VerifyOptions opts;
    opts.n_min = opts.n_max = 6;
    opts.filter.max_degree = 3;
    const auto report = run_verification(opts);
    CHECK(report.graphs == 8);
    CHECK(report.clean());
    const auto* c = find_cell(report, "cor-M1-Delta-upper", "-", 6, 3);
    REQUIRE(c != nullptr);
    CHECK(c->complete);
    CHECK(c->tight == c->members);
    CHECK(c->tight == 1);
    // Unrestricted cells only see part of the class.
    const auto* u = find_cell(report, "cor-M1-uni-lower", "-", 6);
    REQUIRE(u != nullptr);
    CHECK_FALSE(u->complete);
  }

  TEST_CASE("pendant filter") {
    VerifyOptions opts;
    opts.n_min = opts.n_max = 5;
    opts.filter.pendants = 2;
    const auto report = run_verification(opts);
    CHECK(report.clean());
    const auto* c = find_cell(report, "cor-M1-pend-lower", "-", 5, std::nullopt, 2);
    REQUIRE(c != nullptr);
    CHECK(c->attained());
    CHECK(c->tight == 1);
  }

  TEST_CASE("guards") {
    VerifyOptions opts;
    opts.n_min = 4;
    opts.n_max = 10;
    CHECK_THROWS_AS(run_verification(opts), ParameterError);
    opts.n_min = 6;
    opts.n_max = 5;
    CHECK_THROWS_AS(run_verification(opts), ParameterError);
  }

  TEST_CASE("rendering") {
    VerifyOptions opts;
    opts.n_min = opts.n_max = 4;
    const auto report = run_verification(opts);
    const auto text = render_text(report);
    CHECK(text.find("verify n=4..4: 2 graphs") == 0);
    CHECK(text.find("CLEAN") != std::string::npos);
    const auto table = render_tabular(report);
    CHECK(table.find(std::string(kVerifyTabularHeader) + "\n") == 0);
    CHECK(table.find("cor-M1-uni-lower,-,4,,,2,0,1,1,0,1,1,1\n") != std::string::npos);
  }
}

#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "randic/survey.hpp"

using namespace randic;

namespace {

const FamilyResult& family(const SurveyResult& s, const std::string& name) {
  auto it = std::find_if(s.families.begin(), s.families.end(), [&](const auto& f) { return f.name == name; });
  REQUIRE(it != s.families.end());
  return *it;
}

}  // namespace

TEST_CASE("survey at a small grid has no violations") {
  SurveyResult s = run_survey(200, 1e-9);
  CHECK(s.total_violations() == 0);
  CHECK(s.families.size() == 9);
  for (const auto& f : s.families) {
    CHECK(f.claim_cells > 0);
    CHECK(f.cells >= f.claim_cells);
  }
}

TEST_CASE("survey grid bookkeeping") {
  SurveyResult s = run_survey(20, 1e-9);

  // g(2, 1) = 0 is a boundary cell, not a violation.
  const auto& g = family(s, "g_nonneg");
  CHECK(g.violations == 0);
  REQUIRE(g.boundary >= 1);
  CHECK(g.boundary_samples.front().n == 2);
  CHECK(g.boundary_samples.front().k == 1);
  long long g_cells = 0;
  for (int n = 2; n <= 20; ++n) g_cells += n / 2;
  CHECK(g.claim_cells == g_cells);

  // (9, 4) is evaluated but lies outside the k >= 5 region.
  const auto& fa = family(s, "f_additive_pos");
  CHECK(fa.cells == g_cells);
  long long region = 0;
  for (int n = 10; n <= 20; ++n) region += n / 2 - 4;
  CHECK(fa.claim_cells == region);

  const auto& q = family(s, "q_additive");
  long long q_cells = 0;
  for (int n = 4; n <= 20; ++n) q_cells += 5 * (n - 1 - n / 2);
  CHECK(q.claim_cells == q_cells);

  const auto& p3 = family(s, "part3_gap");
  REQUIRE(p3.minimum.has_value());
  CHECK(p3.minimum->n == 15);
  CHECK(p3.minimum->k == 3);
  CHECK(p3.minimum->value == doctest::Approx(0.0192063129210231).epsilon(1e-10));
}

TEST_CASE("violations are counted and sampled") {
  // A negative tolerance demands value >= 1e6, which no cell meets.
  SurveyResult s = run_survey(30, -1e6);
  const auto& g = family(s, "g_nonneg");
  CHECK(g.violations == g.claim_cells);
  CHECK(g.violation_samples.size() == kSurveySampleLimit);
  // Strict claims only look at the sign.
  CHECK(family(s, "part3_gap").violations == 0);
  CHECK(s.total_violations() > 0);
}

TEST_CASE("survey rejects tiny grids") { CHECK_THROWS_AS(run_survey(3, 1e-9), std::invalid_argument); }

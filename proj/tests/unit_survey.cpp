#include <doctest.h>

#include <sstream>

#include "salemparry/catalog.hpp"
#include "salemparry/survey.hpp"

using namespace salem;

namespace {

const std::vector<PeriodCell>& catalog() {
  static const std::vector<PeriodCell> cells = builtin_cells(40);
  return cells;
}

}  // namespace

TEST_CASE("grid layout and weights") {
  SurveyResult s = survey_grid(10, 2000, catalog(), 1);
  CHECK(s.resolution == 10);
  CHECK(s.points.size() == 45);
  CHECK(s.points.front().alpha1 == Rational(-9, 5));
  CHECK(s.points.front().alpha2 == Rational(-7, 5));
  double total = 0;
  for (const auto& p : s.points) {
    CHECK(p.i < p.j);
    total += p.weight;
  }
  // off-diagonal squares of both orderings
  CHECK(total < 1.0);
  CHECK(total > 0.8);
  CHECK_THROWS_AS(survey_grid(1, 10, catalog()), DomainError);
}

TEST_CASE("periods inside cells follow the cell") {
  SurveyResult s = survey_grid(60, 50000, catalog(), 0);
  CHECK(s.mismatches.empty());
  CHECK(s.strictly_inside > 0);
  for (const auto& p : s.points) {
    if (!p.cell || !p.strictly_inside) continue;
    CHECK(p.period == catalog()[*p.cell].orbit_period());
  }
  CHECK(s.in_catalog_fraction > 0.45);
  CHECK(s.in_catalog_fraction < 0.56);
}

TEST_CASE("cap-exceeded points cluster on the diagonal") {
  SurveyResult s = survey_grid(40, 50000, catalog(), 0);
  bool near_one = false;
  for (const auto& p : s.points)
    if (!p.period && p.j == p.i + 1 && abs(p.alpha1 - 1) < Rational(1, 5)) near_one = true;
  CHECK(near_one);
}

TEST_CASE("survey output is stable") {
  SurveyResult a = survey_grid(12, 5000, catalog(), 1);
  SurveyResult b = survey_grid(12, 5000, catalog(), 3);
  std::ostringstream ca, cb, sa, sb;
  write_survey_csv(ca, a, catalog());
  write_survey_csv(cb, b, catalog());
  write_survey_svg(sa, a);
  write_survey_svg(sb, b);
  CHECK(ca.str() == cb.str());
  CHECK(sa.str() == sb.str());
  CHECK(ca.str().rfind("alpha1,alpha2,period,r_degree,cell\n", 0) == 0);
  CHECK(sa.str().find("<svg") != std::string::npos);
}

TEST_CASE("strict interior test") {
  const PeriodCell* r8 = nullptr;
  for (const auto& c : catalog())
    if (c.name == "R8") r8 = &c;
  REQUIRE(r8);
  CHECK(strictly_inside(*r8, make_rational(-4, 3), make_rational(4, 3)));
  CHECK_FALSE(strictly_inside(*r8, Rational(-1), Rational(1)));
}

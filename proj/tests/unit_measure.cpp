#include <doctest.h>

#include <cmath>

#include "salemparry/catalog.hpp"
#include "salemparry/measure.hpp"

using namespace salem;

namespace {

const std::vector<PeriodCell>& base_cells() {
  static const std::vector<PeriodCell> cells = builtin_cells(23);
  return cells;
}

MeasureOptions opts(double tol, bool half = true) {
  MeasureOptions o;
  o.tolerance = tol;
  o.half_domain = half;
  return o;
}

bool brackets(const MeasureResult& m, double v) { return m.lower.get_d() <= v && v <= m.upper.get_d(); }

}  // namespace

TEST_CASE("the whole square has measure one") {
  MeasureResult m = region_measure({Region{}}, opts(1e-3));
  CHECK(m.lower == 1);
  CHECK(m.upper == 1);
  CHECK(m.method == MeasureMethod::rigorous_grid);
  CHECK(region_measure({}, opts(1e-3)).upper == 0);
}

TEST_CASE("symmetric half-planes have measure one half") {
  Region sum_positive{{{0, 1, 0}, true}};       // alpha1 + alpha2 > 0
  Region product_positive{{{-2, 0, 1}, true}};  // alpha1 alpha2 > 0
  for (const auto& r : {sum_positive, product_positive}) {
    MeasureResult m = region_measure({r}, opts(1e-3));
    CHECK(brackets(m, 0.5));
    CHECK(Rational(m.upper - m.lower).get_d() < 1e-3);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(region_measure({Region{}}, opts(0)), DomainError);
  CHECK_THROWS_AS(region_measure({Region{}}, opts(-1)), DomainError);
  MeasureOptions deep = opts(1e-3);
  deep.max_level = 31;
  CHECK_THROWS_AS(region_measure({Region{}}, deep), DomainError);
  deep.max_level = 0;
  CHECK_THROWS_AS(region_measure({Region{}}, deep), DomainError);
  CHECK_THROWS_AS(shrunken_regions(base_cells(), Rational(-1, 10)), DomainError);
  CHECK_THROWS_AS(shrunken_regions(base_cells(), Rational(3, 4)), DomainError);
}

TEST_CASE("half and full domain classification agree") {
  auto regions = cell_regions(base_cells());
  MeasureResult half = region_measure(regions, opts(4e-3, true));
  MeasureResult full = region_measure(regions, opts(4e-3, false));
  CHECK(half.lower <= full.upper);
  CHECK(full.lower <= half.upper);
}

TEST_CASE("refinement tightens the bracket") {
  auto regions = cell_regions(base_cells());
  MeasureResult coarse = region_measure(regions, opts(2e-2));
  MeasureResult fine = region_measure(regions, opts(2e-3));
  CHECK(fine.upper - fine.lower < coarse.upper - coarse.lower);
  CHECK(fine.lower >= coarse.lower);
  CHECK(fine.upper <= coarse.upper);
  CHECK(fine.levels > coarse.levels);
}

TEST_CASE("measure is monotone in the set of cells") {
  std::vector<PeriodCell> some(base_cells().begin(), base_cells().begin() + 8);
  MeasureResult part = cell_measure(some, 2e-3);
  MeasureResult all = cell_measure(base_cells(), 2e-3);
  CHECK(part.lower <= all.upper);
  CHECK(part.upper.get_d() < all.lower.get_d() + 2e-3);
}

TEST_CASE("shrunken cells") {
  MeasureResult plain = cell_measure(base_cells(), 2e-3);
  MeasureResult zero = shrunken_cell_measure(base_cells(), Rational(0), 2e-3);
  CHECK(zero.lower == plain.lower);
  CHECK(zero.upper == plain.upper);

  MeasureResult halfway = shrunken_cell_measure(base_cells(), Rational(1, 2), 2e-3);
  CHECK(halfway.upper.get_d() < 2e-3);

  double last = 0;
  for (Rational eps : {Rational(1, 10), Rational(1, 50), Rational(1, 1000)}) {
    MeasureResult m = shrunken_cell_measure(base_cells(), eps, 2e-3);
    CHECK(m.upper <= plain.upper);
    CHECK(m.lower.get_d() >= last - 2e-3);
    last = m.lower.get_d();
  }
  CHECK(std::abs(last - 0.458895) < 0.01);
}

TEST_CASE("Monte Carlo estimates are seeded") {
  auto regions = cell_regions(base_cells());
  MeasureResult a = monte_carlo_measure(regions, 20000, 7);
  MeasureResult b = monte_carlo_measure(regions, 20000, 7);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK(a.method == MeasureMethod::monte_carlo);
  CHECK(a.boxes == 20000);
  CHECK(brackets(a, 0.458895));
  CHECK(to_string(a.method) == "monte-carlo");
}

TEST_CASE("certified cosine enclosures") {
  auto [lo0, hi0] = alpha_enclosure(0, 4);
  CHECK(lo0 <= -2.0);
  CHECK(hi0 >= -2.0);
  for (int level : {1, 5, 12}) {
    std::uint64_t n = std::uint64_t{1} << level;
    for (std::uint64_t k = 0; k <= n; k += std::max<std::uint64_t>(1, n / 16)) {
      auto [lo, hi] = alpha_enclosure(k, level);
      long double exact = -2 * std::cos(3.14159265358979323846264338327950288L * k / n);
      // long double pi is itself off by about 1e-19
      CHECK(static_cast<long double>(lo) <= exact + 1e-18L);
      CHECK(exact - 1e-18L <= static_cast<long double>(hi));
      if (2 * k == n) CHECK((lo <= 0.0 && 0.0 <= hi));
      CHECK(hi - lo < 1e-14);
    }
  }
}

#ifndef SALEMPARRY_MEASURE_HPP
#define SALEMPARRY_MEASURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "salemparry/cells.hpp"

namespace salem {

/*
  Measure of a union of cells under the conjugate-angle distribution: the
  fraction of (theta1, theta2) in (0, pi)^2 whose point
  (-2 cos theta1, -2 cos theta2) lies in some cell. Both orderings of the
  pair count, as the (c1, c2) chart is symmetric.
*/

enum class MeasureMethod { rigorous_grid, monte_carlo };
std::string to_string(MeasureMethod m);

struct MeasureResult {
  // rigorous-grid: certified bounds; monte-carlo: a 99.9% normal confidence interval.
  Rational lower, upper;
  MeasureMethod method = MeasureMethod::rigorous_grid;
  std::uint64_t boxes = 0;    // boxes classified (grid) or samples drawn (Monte Carlo)
  int levels = 0;             // deepest subdivision level reached
  double seconds = 0;
};

/// A region {form > 0 or >= 0 for each half-plane} in the (c1, c2) chart.
using Region = std::vector<HalfPlane>;

struct MeasureOptions {
  double tolerance = 5e-4;
  unsigned threads = 0;     // 0: hardware concurrency
  bool half_domain = true;  // classify theta1 <= theta2 boxes and double the off-diagonal ones
  int max_level = 26;
};

/// Rigorous dyadic-grid bounds. Throws DomainError if tolerance <= 0.
MeasureResult region_measure(const std::vector<Region>& regions, const MeasureOptions& opts);

/// Regions of the proper cells (status cell) in the list.
std::vector<Region> cell_regions(const std::vector<PeriodCell>& cells);

/// Regions with eps < g_i <= 1 - eps in place of 0 < g_i <= 1.
std::vector<Region> shrunken_regions(const std::vector<PeriodCell>& cells, const Rational& eps);

MeasureResult cell_measure(const std::vector<PeriodCell>& cells, double tolerance, unsigned threads = 0);

/// Throws DomainError unless 0 <= eps <= 1/2.
MeasureResult shrunken_cell_measure(const std::vector<PeriodCell>& cells, const Rational& eps, double tolerance,
                                    unsigned threads = 0);

/// Uniform sampling of (0, pi)^2 with a fixed seed.
MeasureResult monte_carlo_measure(const std::vector<Region>& regions, std::uint64_t samples, std::uint64_t seed);

/// Certified enclosure [lo, hi] of -2 cos(pi k / 2^level).
std::pair<double, double> alpha_enclosure(std::uint64_t k, int level);

}  // namespace salem

#endif

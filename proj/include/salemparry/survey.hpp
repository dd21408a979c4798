#ifndef SALEMPARRY_SURVEY_HPP
#define SALEMPARRY_SURVEY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "salemparry/cells.hpp"

namespace salem {

/// Grid point (alpha1, alpha2) = (a_i, a_j), i < j, a_k = -2 + 4(k + 1/2)/N.
struct SurveyPoint {
  std::uint32_t i = 0, j = 0;
  Rational alpha1, alpha2;
  std::optional<std::size_t> period;  // origin orbit of T
  std::optional<std::size_t> cell;    // index of the containing cell
  bool strictly_inside = false;       // 0 < g < 1 for every varying form of that cell
  double weight = 0;                  // theta-measure of the grid square, both orderings
};

struct SurveyResult {
  std::uint32_t resolution = 0;
  std::size_t cap = 0;
  std::vector<SurveyPoint> points;  // ordered by (i, j)
  double in_catalog_fraction = 0;   // theta-weighted
  double periodic_fraction = 0;     // theta-weighted
  std::size_t strictly_inside = 0;
  /// Strictly-inside points whose period differs from deg R + 5.
  std::vector<std::size_t> mismatches;
};

/// Throws DomainError when resolution < 2.
SurveyResult survey_grid(std::uint32_t resolution, std::size_t cap, const std::vector<PeriodCell>& cells,
                         unsigned threads = 0);

/// Columns alpha1, alpha2, period, r_degree, cell; empty fields for none.
void write_survey_csv(std::ostream& os, const SurveyResult& s, const std::vector<PeriodCell>& cells);

/// Static heat map of both orderings: cells colored by index, other
/// periodic points grey, cap-exceeded points as black dots.
void write_survey_svg(std::ostream& os, const SurveyResult& s);

/// 0 < g < 1 for every varying form of the cell.
bool strictly_inside(const PeriodCell& cell, const Rational& c1, const Rational& c2);

}  // namespace salem

#endif

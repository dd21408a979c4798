// Derived boundaries of the base cells against the reference lists.
#include <doctest.h>

#include <map>

#include "salemparry/boundary.hpp"
#include "salemparry/catalog.hpp"
#include "catalog_reference.hpp"

using namespace salem;

namespace {

using namespace catalog_ref;

std::string describe(const Pieces& ps) {
  std::string out;
  for (const auto& p : ps) out += "\n  " + p.to_string();
  return out;
}

const std::vector<PeriodCell>& base_cells() {
  static const std::vector<PeriodCell> cells = builtin_cells(23);
  return cells;
}

}  // namespace

TEST_CASE("derived boundaries match the reference lists") {
  REQUIRE(base_cells().size() == 23);
  for (const auto& cell : base_cells()) {
    Pieces derived = alpha_boundary(cell);
    const Pieces& listed = reference().at(cell.name);
    auto fix = corrected().find(cell.name);
    if (fix == corrected().end()) {
      CHECK_MESSAGE(same_set(derived, listed), cell.name, describe(derived));
    } else {
      CHECK_MESSAGE(!same_set(derived, listed), cell.name, " unexpectedly matches its reference entry");
      CHECK_MESSAGE(same_set(derived, fix->second), cell.name, describe(derived));
    }
  }
}

TEST_CASE("corrected entries differ from the reference in one detail") {
  for (const auto& [name, fixed] : corrected()) {
    const Pieces& listed = reference().at(name);
    REQUIRE(listed.size() == fixed.size());
    std::size_t differing = 0;
    for (const auto& p : listed)
      if (std::none_of(fixed.begin(), fixed.end(), [&](const AlphaPiece& y) { return same_piece(p, y); }))
        ++differing;
    CHECK_MESSAGE(differing >= 1, name);
    CHECK_MESSAGE(differing <= 2, name);
  }
}

TEST_CASE("R8 in the c-chart") {
  const PeriodCell& r8 = base_cells()[7];
  REQUIRE(r8.name == "R8");
  auto edges = c_boundary(r8);
  REQUIRE(edges.size() == 3);
  auto has = [&](std::array<Integer, 3> line, bool lower, bool strict, Rational lo, Rational hi) {
    return std::any_of(edges.begin(), edges.end(), [&](const CEdge& e) {
      return e.line == line && e.lower == lower && e.strict == strict && e.c2_lo == lo && e.c2_hi == hi;
    });
  };
  // c1 > (-2c2 - 3)/4 on (1/2, 5/2); c1 <= -1 on (1/2, 1]; c1 <= (-2c2 - 1)/3 on (1, 5/2)
  CHECK(has({3, 4, 2}, true, true, Rational(1, 2), Rational(5, 2)));
  CHECK(has({1, 1, 0}, false, false, Rational(1, 2), Rational(1)));
  CHECK(has({1, 3, 2}, false, false, Rational(1), Rational(5, 2)));
}

TEST_CASE("interiors of the base cells are pairwise disjoint") {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < base_cells().size(); ++i)
    for (std::size_t j = i + 1; j < base_cells().size(); ++j) {
      DisjointnessResult d = cells_disjoint(base_cells()[i], base_cells()[j]);
      CHECK_MESSAGE(d.disjoint, base_cells()[i].name, " ", base_cells()[j].name);
      ++pairs;
    }
  CHECK(pairs == 253);
}

TEST_CASE("interiors of all 40 cells are pairwise disjoint") {
  auto cells = builtin_cells(40);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      CHECK_MESSAGE(cells_disjoint(cells[i], cells[j]).disjoint, cells[i].name, " ", cells[j].name);
}

TEST_CASE("the catalog regenerates identically") {
  auto a = builtin_cells(23), b = builtin_cells(23);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].forms == b[i].forms);
    CHECK(a[i].polygon == b[i].polygon);
  }
}

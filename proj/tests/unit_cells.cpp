#include <doctest.h>

#include "salemparry/catalog.hpp"
#include "salemparry/cells.hpp"

using namespace salem;

namespace {

const std::vector<PeriodCell>& catalog40() {
  static const std::vector<PeriodCell> cells = builtin_cells(40);
  return cells;
}

const PeriodCell& cell(const std::string& name) {
  for (const auto& c : catalog40())
    if (c.name == name) return c;
  throw std::runtime_error("no cell " + name);
}

LinearForm lf(long a0, long a1, long a2) { return {a0, a1, a2}; }

}  // namespace

TEST_CASE("symbolic coefficient forms") {
  std::vector<LinearForm> r8 = symbolic_g(cell("R8").r);
  std::vector<LinearForm> expect{lf(1, 0, 0), lf(2, 1, 0), lf(2, 2, 1), lf(2, 3, 2), lf(3, 4, 2),
                                 lf(3, 4, 2), lf(2, 3, 2), lf(2, 2, 1), lf(2, 1, 0), lf(1, 0, 0)};
  CHECK(r8 == expect);
  CHECK(symbolic_g(int_poly({1})) == std::vector<LinearForm>{lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1), lf(0, 1, 0), lf(1, 0, 0)});

  std::vector<LinearForm> r2 = symbolic_g(int_poly({1, 1}));
  REQUIRE(r2.size() == 6);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK_FALSE(r2[i].is_constant());
    CHECK(r2[i].eval(Rational(0), Rational(1)) == 1);
  }
  CHECK(to_string(lf(3, 4, 2)) == "3 + 4*c1 + 2*c2");
  CHECK_THROWS_AS(symbolic_g(int_poly({2, 1})), DomainError);
  CHECK_THROWS_AS(symbolic_g(int_poly({1, 2})), DomainError);
}

TEST_CASE("the R8 cell is a triangle") {
  const PeriodCell& c = cell("R8");
  CHECK(c.status == CellStatus::cell);
  CHECK(c.polygon.size() == 3);
  for (CPoint v : {CPoint{-1, Rational(1, 2)}, CPoint{-1, 1}, CPoint{-2, Rational(5, 2)}})
    CHECK(std::find(c.polygon.begin(), c.polygon.end(), v) != c.polygon.end());
  CHECK(polygon_area(c.polygon) == Rational(1, 4));
  CHECK(c.one_indices.empty());
  CHECK(c.orbit_period() == 10);
}

TEST_CASE("cells with constant-one coefficients carry side conditions") {
  const PeriodCell& l1 = cell("L1");
  CHECK(l1.status == CellStatus::cell);
  CHECK(l1.one_indices == std::vector<std::size_t>{3, 8});
  CHECK(l1.side_conditions_hold);
  for (const auto& chk : l1.one_checks) CHECK(chk.holds);
  for (const auto& c : catalog40()) {
    CHECK(c.status == CellStatus::cell);
    CHECK(c.side_conditions_hold);
  }
}

TEST_CASE("empty and degenerate cells") {
  // g_1 = c1 + 5 <= 1 forces c1 <= -4, outside the domain
  PeriodCell e = derive_cell(int_poly({1, 5, 1}), "E");
  CHECK(e.status == CellStatus::empty);
  CHECK(e.polygon.empty());
  CHECK_THROWS_AS(derive_cell(int_poly({3, 1})), DomainError);

  RotationParams p{Scalar(make_rational(22, 7)), Scalar(make_rational(31, 7))};
  auto r = shifted_addition_search(p, 50000);
  REQUIRE(r.has_value());
  PeriodCell d = derive_cell(*r, "D");
  CHECK(d.status == CellStatus::degenerate);
  CHECK(d.polygon == std::vector<CPoint>{CPoint{make_rational(22, 7), make_rational(31, 7)}});
}

TEST_CASE("clipping and areas") {
  std::vector<CPoint> whole = clip_polygon({});
  CHECK(polygon_area(whole) == 32);
  std::vector<CPoint> half = clip_polygon({{lf(0, 1, 0), false}});
  CHECK(polygon_area(half) == 16);
  CHECK(clip_polygon({{lf(-10, 1, 0), false}}).empty());
  CHECK(below_parabola({0, Rational(199, 100)}));
  CHECK_FALSE(below_parabola({0, 2}));
  CHECK(interior_point({{lf(0, 1, 0), true}}).has_value());
  CHECK_FALSE(interior_point({{lf(-3, 0, 1), true}, {lf(0, 0, 0), true}}).has_value());
}

TEST_CASE("u, v and the threshold") {
  PeriodCell r1 = derive_cell(int_poly({1}), "R1");
  auto at = [&](long n1, long d1, long n2, long d2) {
    Rational a1 = make_rational(n1, d1), a2 = make_rational(n2, d2);
    return choose_uv(r1, Scalar(Rational(a1 + a2)), Scalar(Rational(a1 * a2 + 2)));
  };
  CHECK_THROWS_AS(at(3, 2, -3, 2), DomainError);
  CHECK_THROWS_AS(at(1, 2, 1, 4), DomainError);
  UVChoice uv = at(7, 4, -1, 1);
  CHECK(uv.u == Rational(1, 8));
  CHECK(uv.v == Rational(7, 8));
  CHECK(uv.threshold == 16);
}

TEST_CASE("membership and location") {
  RotationParams centroid{Scalar(make_rational(-4, 3)), Scalar(make_rational(4, 3))};
  auto idx = locate_point(centroid, catalog40());
  REQUIRE(idx.has_value());
  CHECK(catalog40()[*idx].name == "R8");

  // c = (0, 7/4): whichever cell contains it must be the only one
  std::size_t hits = 0;
  for (const auto& c : catalog40()) hits += in_cell(c, Rational(0), make_rational(7, 4)) ? 1 : 0;
  auto found = locate_point(make_rational(-1, 2), make_rational(1, 2), catalog40());
  CHECK(hits <= 1);
  CHECK(found.has_value() == (hits == 1));
  if (found) CHECK(in_cell(catalog40()[*found], Rational(0), make_rational(7, 4)));

  CHECK_FALSE(locate_point(make_rational(1, 3), make_rational(1, 3), catalog40()).has_value());
  CHECK_FALSE(in_cell(cell("R8"), Rational(-1), Rational(1, 2)));  // vertex on the open edge
  CHECK(in_cell(cell("R8"), Rational(-1), Rational(1)));           // closed edges of both forms
}

TEST_CASE("disjointness with witnesses") {
  CHECK(cells_disjoint(cell("R1"), cell("R2")).disjoint);
  DisjointnessResult self = cells_disjoint(cell("R8"), cell("R8"));
  CHECK_FALSE(self.disjoint);
  REQUIRE(self.witness.has_value());
  CHECK(in_cell(cell("R8"), self.witness->c1, self.witness->c2));
  CHECK(below_parabola(*self.witness));
}

TEST_CASE("predicted words") {
  IntPolynomial p = make_sextic(4, -1, 6);
  ExpansionPrediction pr = predicted_word(p, int_poly({1}));
  CHECK(pr.c.size() == 5);
  CHECK(pr.word.prefix.size() == 1);
  CHECK(pr.word.period.size() == 5);
  CHECK(pr.word.prefix[0] == pr.c[0]);
  CHECK(pr.word.period.back() == pr.c[0] - 1);
  CHECK_THROWS_AS(predicted_word(int_poly({1, -3, 1}), int_poly({2})), DomainError);

  // odd-degree R gives an odd-degree product; the period is still deg(R P) - 1
  ExpansionPrediction odd = predicted_word(p, int_poly({1, 1}));
  CHECK(odd.word.period.size() == 6);
}

TEST_CASE("checked predictions match the expansion engine") {
  // Sextics with a point in some cell and beta above the threshold.
  int compared = 0;
  for (long a = 8; a <= 40 && compared < 12; ++a)
    for (long b = -a; b <= a && compared < 12; b += 3)
      for (long c = -a; c <= 2 * a; c += 2) {
        IntPolynomial p = make_sextic(a, b, c);
        SalemVerdict v = classify_salem(p);
        if (!v.salem) continue;
        auto [c1, c2] = sextic_rotation_coordinates(*v.data);
        auto idx = locate_point(RotationParams{c1, c2}, catalog40());
        if (!idx) continue;
        ExpansionPrediction pr;
        try {
          pr = predict_expansion(*v.data, catalog40()[*idx]);
        } catch (const DomainError&) {
          continue;
        }
        ExpansionRecord rec = expand_one(p, 100000);
        REQUIRE(rec.status == ExpansionStatus::periodic);
        CHECK(rec.word().canonical() == pr.word.canonical());
        CHECK(check_self_lex(pr.word));
        CHECK(pr.word.period.size() == catalog40()[*idx].r.degree() + 5);
        ++compared;
        break;
      }
  CHECK(compared >= 10);
}

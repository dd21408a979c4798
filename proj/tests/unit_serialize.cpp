#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "salemparry/catalog.hpp"
#include "salemparry/serialize.hpp"

using namespace salem;

TEST_CASE("numbers") {
  CHECK(to_json(make_rational(-6, 4)) == "-3/2");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(rational_from_json("7/21") == make_rational(1, 3));
  CHECK(rational_from_json(3) == 3);
  CHECK_THROWS_AS(rational_from_json(1.5), ParseError);
  CHECK(to_json(Integer(42)) == 42);
  Integer big("123456789012345678901234567890");
  CHECK(to_json(big) == "123456789012345678901234567890");
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(integer_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(integer_from_json(Json("1.5")), ParseError);
}

TEST_CASE("polynomials and algebraic numbers") {
  IntPolynomial p = int_poly({1, -8, 10, -15, 10, -8, 1});
  CHECK(to_json(p).dump() == "[1,-8,10,-15,10,-8,1]");
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(polynomial_from_json(Json::object()), ParseError);

  RealAlgebraic r2 = isolate_real_roots(int_poly({-2, 0, 1})).back();
  Json j = to_json(r2);
  CHECK(j.contains("poly"));
  RealAlgebraic back = algebraic_from_json(j);
  CHECK(back.minpoly() == r2.minpoly());
  CHECK(back.approx() == doctest::Approx(1.41421356));
  j["lo"] = "-2";
  CHECK_THROWS_AS(algebraic_from_json(j), DomainError);
  CHECK_THROWS_AS(algebraic_from_json(Json{{"poly", {-2, 0, 1}}}), ParseError);
}

TEST_CASE("records use stable keys") {
  ExpansionRecord r = expand_one(int_poly({-1, -1, 1}), 100);
  Json j = to_json(r);
  CHECK(j.dump() == R"({"m":0,"p":2,"states_visited":2,"status":"periodic","word":{"period":[1,0],"prefix":[]}})");

  ExpansionRecord capped = expand_one(int_poly({1, -8, 10, -15, 10, -8, 1}), 5);
  CHECK(to_json(capped)["p"].is_null());

  MeasureResult m;
  m.lower = make_rational(1, 3);
  m.upper = make_rational(1, 2);
  m.seconds = 1.5;
  CHECK_FALSE(to_json(m, false).contains("seconds"));
  CHECK(to_json(m, true)["seconds"] == 1.5);
  CHECK(to_json(m, false)["lower"] == "1/3");
}

TEST_CASE("cells and catalogs round-trip through the derivation") {
  auto cells = builtin_cells(23);
  Json j = catalog_to_json(cells);
  auto back = catalog_from_json(j);
  REQUIRE(back.size() == cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(back[i].name == cells[i].name);
    CHECK(back[i].polygon == cells[i].polygon);
  }
  Json r8 = to_json(cells[7]);
  CHECK(r8["name"] == "R8");
  CHECK(r8["status"] == "cell");
  CHECK(r8["area"] == "1/4");

  Json tampered = j;
  tampered["cells"][7]["forms"][1] = Json::array({9, 9, 9});
  CHECK_THROWS_AS(catalog_from_json(tampered), ParseError);
  CHECK_THROWS_AS(catalog_from_json(Json::array()), ParseError);

  auto path = (std::filesystem::temp_directory_path() / "salemparry_catalog_test.json").string();
  write_catalog(path, cells);
  CHECK(read_catalog(path).size() == 23);
  std::remove(path.c_str());
  CHECK_THROWS(read_catalog(path));
}

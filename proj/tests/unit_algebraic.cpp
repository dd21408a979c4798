#include <doctest.h>

#include "oracles/numeric_roots.hpp"
#include "salemparry/real_algebraic.hpp"
#include "salemparry/scalar.hpp"

using namespace salem;

namespace {

RealAlgebraic largest_root(const IntPolynomial& p) { return isolate_real_roots(p).back(); }

}  // namespace

TEST_CASE("root isolation") {
  auto golden = isolate_real_roots(int_poly({-1, -1, 1}));
  REQUIRE(golden.size() == 2);
  CHECK(golden[1].approx() == doctest::Approx(1.6180339887));
  CHECK(golden[0].interval().hi <= golden[1].interval().lo);

  IntPolynomial p = int_poly({1, -8, 10, -15, 10, -8, 1});
  auto roots = isolate_real_roots(p);
  CHECK(roots.size() == oracle::real_roots(p).size());
  CHECK(roots.size() == 2);
  CHECK(roots[0].approx() * roots[1].approx() == doctest::Approx(1.0));

  auto cube = isolate_real_roots(int_poly({0, 0, 0, 1}));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].is_rational());
  CHECK(cube[0].rational_value() == 0);

  CHECK(isolate_real_roots(int_poly({1, 0, 1})).empty());
  CHECK_THROWS_AS(isolate_real_roots(IntPolynomial{}), DomainError);
}

TEST_CASE("isolation agrees with the numeric oracle") {
  for (auto p : {int_poly({-6, 11, -6, 1}), int_poly({1, -7, -3, -11, -3, -7, 1}), int_poly({2, -2, -4, 1}),
                 int_poly({-1, 0, 0, 0, 0, 3, 0, 1})}) {
    auto exact = isolate_real_roots(p);
    auto approx = oracle::real_roots(p);
    REQUIRE(exact.size() == approx.size());
    for (std::size_t i = 0; i < exact.size(); ++i) CHECK(exact[i].approx() == doctest::Approx(approx[i]).epsilon(1e-9));
  }
}

TEST_CASE("constructor validates the isolating interval") {
  IntPolynomial p = int_poly({-2, 0, 1});
  CHECK_NOTHROW(RealAlgebraic(p, 1, 2));
  CHECK_THROWS_AS(RealAlgebraic(p, -2, 2), DomainError);
  CHECK_THROWS_AS(RealAlgebraic(p, 2, 1), DomainError);
  CHECK_THROWS_AS(RealAlgebraic(int_poly({-1, 1}), 1, 2), DomainError);
  CHECK_THROWS_AS(RealAlgebraic(int_poly({3}), 0, 1), DomainError);
}

TEST_CASE("exact signs at algebraic points") {
  RealAlgebraic phi = largest_root(int_poly({-1, -1, 1}));
  CHECK(alg_sign(int_poly({-1, -1, 1}), phi) == 0);
  CHECK(alg_sign(int_poly({-1, 1}), phi) == 1);
  CHECK(alg_sign(RatPolynomial{Rational(-1618, 1000), Rational(1)}, phi) == 1);
  CHECK(alg_sign(RatPolynomial{Rational(-1619, 1000), Rational(1)}, phi) == -1);
  // phi^2 - phi - 1 = 0 hidden in a higher-degree multiple
  CHECK(alg_sign(int_poly({-1, -1, 1}) * int_poly({5, 0, 0, 1}), phi) == 0);

  RealAlgebraic beta = largest_root(int_poly({1, -7, -3, -11, -3, -7, 1}));
  CHECK(alg_sign(int_poly({-7, 1}), beta) == 1);
  CHECK(compare(beta, Rational(7)) == 1);
  CHECK(compare(beta, Rational(8)) == -1);
}

TEST_CASE("floor and ceil at algebraic points") {
  RealAlgebraic phi = largest_root(int_poly({-1, -1, 1}));
  CHECK(alg_floor(to_rational(int_poly({0, 1})), phi) == 1);
  CHECK(alg_floor(to_rational(int_poly({0, 0, 1})), phi) == 2);
  CHECK(alg_ceil(to_rational(int_poly({0, 0, 1})), phi) == 3);
  // phi^2 - phi = 1 exactly: floor and ceil coincide
  CHECK(alg_floor(to_rational(int_poly({0, -1, 1})), phi) == 1);
  CHECK(alg_ceil(to_rational(int_poly({0, -1, 1})), phi) == 1);

  IntPolynomial p = int_poly({1, -9, -1, -11, -1, -9, 1});
  RealAlgebraic beta = largest_root(p);
  CHECK(oracle::real_roots(p).back() == doctest::Approx(beta.approx()));
  CHECK(alg_floor(to_rational(int_poly({0, 1})), beta) == 9);
}

TEST_CASE("enclosures shrink to the requested width") {
  RealAlgebraic r2 = largest_root(int_poly({-2, 0, 1}));
  Rational w(1, 1000000);
  RationalInterval e = enclose(to_rational(int_poly({0, 0, 0, 1})), r2, w);  // 2 sqrt 2
  CHECK(e.width() <= w);
  CHECK(e.lo.get_d() == doctest::Approx(2.8284271247));
  r2.refine_to_width(w);
  CHECK(r2.interval().width() <= w);
}

TEST_CASE("scalars in a quadratic field") {
  RealAlgebraic r2 = largest_root(int_poly({-2, 0, 1}));
  Scalar s = Scalar::generator(r2);
  CHECK((s * s).is_rational());
  CHECK((s * s).rational() == 2);
  CHECK((s - Scalar(1)).sign() == 1);
  CHECK((s * Scalar(3)).floor() == 4);
  CHECK((s * Scalar(3)).ceil() == 5);
  CHECK((Scalar(make_rational(7, 2))).floor() == 3);
  RealAlgebraic r3 = largest_root(int_poly({-3, 0, 1}));
  CHECK_THROWS_AS(s + Scalar::generator(r3), DomainError);
}

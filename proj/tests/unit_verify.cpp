#include <doctest.h>

#include "salemparry/catalog.hpp"
#include "salemparry/verify.hpp"

using namespace salem;

namespace {

PeriodicWord word(std::initializer_list<long> prefix, std::initializer_list<long> period) {
  return {std::vector<Integer>(prefix.begin(), prefix.end()), std::vector<Integer>(period.begin(), period.end())};
}

}  // namespace

TEST_CASE("unimodular roots of small perturbations of x^2n + 1") {
  CHECK(verify_unit_circle_instance({0, 0, 0}).status == CheckStatus::pass);
  CHECK(unimodular_trace_roots(to_rational(int_poly({1, 0, 0, 0, 1}))) == 2);

  VerificationReport five = verify_unit_circle(5, 200, 1);
  CHECK(five.status == CheckStatus::pass);
  CHECK(five.details.at("passed") == "200");
  CHECK(five.failures.empty());

  // out of hypothesis: reported as not applicable, never as a failure
  CHECK(verify_unit_circle_instance({1, 1, 1}).status == CheckStatus::skipped);
  CHECK(verify_unit_circle_instance({Rational(1, 8), 0, Rational(1, 9)}).status == CheckStatus::skipped);
  CHECK(verify_unit_circle_instance({Rational(1, 3), Rational(-1, 3), Rational(1, 3)}).status == CheckStatus::pass);
  CHECK_THROWS_AS(verify_unit_circle(1, 10, 1), DomainError);
}

TEST_CASE("deterministic given the seed") {
  VerificationReport a = verify_unit_circle(4, 30, 99), b = verify_unit_circle(4, 30, 99);
  CHECK(a.input == b.input);
  CHECK(a.details == b.details);
}

TEST_CASE("interlacing of the averaged polynomial") {
  for (int n = 2; n <= 10; ++n) CHECK_MESSAGE(verify_interlacing(n).status == CheckStatus::pass, n);
  CHECK_THROWS_AS(verify_interlacing(1), DomainError);
}

TEST_CASE("closed-form words for well-posed sextics") {
  CHECK(closed_form_word(4, -1, 6) == word({4}, {0, 1, 3, 2, 1, 1, 2, 3, 1, 0, 3, 3}));
  CHECK(closed_form_word(5, -2, 6) == word({4}, {4, 0, 0, 3, 3, 0, 0, 4, 3, 3}));
  CHECK_FALSE(closed_form_word(4, 5, 6).has_value());

  VerificationReport two = verify_closed_form(4, -1, 6, 100000);
  CHECK(two.status == CheckStatus::pass);
  CHECK(two.details.at("m") == "1");
  CHECK(two.details.at("p") == "12");

  VerificationReport one = verify_closed_form(5, -2, 6, 100000);
  CHECK(one.status == CheckStatus::pass);
  CHECK(one.details.at("p") == "10");

  VerificationReport skipped = verify_closed_form(7, 3, 11, 100000);
  CHECK(skipped.status == CheckStatus::skipped);
  CHECK(skipped.details.at("reason") == "not well-posed");

  VerificationReport scan = verify_closed_form_scan(6, 100000);
  CHECK(scan.status == CheckStatus::pass);
}

TEST_CASE("power-word predictions for one Salem number") {
  auto cells = builtin_cells(40);
  PowerCheckOptions o;
  o.m_lo = 1;
  o.m_hi = 40;
  VerificationReport r = verify_power_words(int_poly({1, -8, 10, -15, 10, -8, 1}), cells, o);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.details.at("m_count") == "40");
  CHECK(std::stoul(r.details.at("matched")) == std::stoul(r.details.at("eligible")));
  CHECK(std::stoul(r.details.at("located")) >= std::stoul(r.details.at("eligible")));
  CHECK_THROWS_AS(verify_power_words(int_poly({1, -3, 1}), cells, o), DomainError);
}

TEST_CASE("degenerate cells map to conjugate coordinates") {
  RotationParams p{Scalar(make_rational(22, 7)), Scalar(make_rational(31, 7))};
  PeriodCell d = derive_cell(*shifted_addition_search(p, 50000), "D");
  CHECK(d.r.degree() == 412);
  auto pts = degenerate_points({d});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].cell == "D");
  CHECK(pts[0].alpha_small == QuadraticIrrational(make_rational(11, 7), make_rational(-1, 7), 2));
  CHECK(pts[0].alpha_large == QuadraticIrrational(make_rational(11, 7), make_rational(1, 7), 2));
  CHECK(degenerate_points(builtin_cells(23)).empty());
}

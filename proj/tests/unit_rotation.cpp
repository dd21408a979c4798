#include <doctest.h>

#include "salemparry/catalog.hpp"
#include "salemparry/rotation.hpp"

using namespace salem;

namespace {

RotationParams alphas(long n1, long d1, long n2, long d2) {
  return RotationParams::from_alphas(Scalar(make_rational(n1, d1)), Scalar(make_rational(n2, d2)));
}

IntPolynomial builtin_r(const std::string& name) {
  for (const auto& e : builtin_entries(40))
    if (e.name == name) return e.r;
  throw std::runtime_error("no entry " + name);
}

}  // namespace

TEST_CASE("parameters from conjugate coordinates") {
  RotationParams p = alphas(-1, 1, 1, 1);
  CHECK(p.c1.rational() == 0);
  CHECK(p.c2.rational() == 1);
  CHECK(p.admissible());
  CHECK_FALSE(alphas(1, 2, 1, 2).admissible());   // diagonal
  CHECK_FALSE(alphas(-5, 2, 1, 2).admissible());  // alpha outside (-2, 2)
  CHECK(alphas(-19, 10, 19, 10).admissible());
}

TEST_CASE("one step of T") {
  RotationParams p = alphas(-1, 1, 1, 1);
  CHECK(step_T({0, 0, 0, 0}, p) == Z4{0, 0, 0, 1});
  Z4 s{0, 0, 0, 0};
  std::vector<Integer> ks;
  for (int i = 0; i < 6; ++i) {
    s = step_T(s, p);
    ks.push_back(s[3]);
  }
  CHECK(s == Z4{0, 0, 0, 0});
  CHECK(ks == std::vector<Integer>{1, 1, 0, 0, 0, 0});
}

TEST_CASE("direct recurrence agrees with T") {
  // k_n = 1 - k_{n-2} - k_{n-4} when c1 = 0, c2 = 1 and values stay integral
  RotationParams p = alphas(-1, 1, 1, 1);
  std::vector<long> k{0, 0, 0, 0};
  Z4 s{0, 0, 0, 0};
  for (int i = 0; i < 30; ++i) {
    std::size_t n = k.size();
    k.push_back(1 - k[n - 2] - k[n - 4]);
    s = step_T(s, p);
    CHECK(s[3] == k.back());
  }
}

TEST_CASE("inverse step") {
  RotationParams p = alphas(-3, 7, 5, 4);
  Z4 s{3, -2, 7, 1};
  CHECK(step_T_inverse(step_T(s, p), p) == s);
  CHECK(step_T(step_T_inverse(s, p), p) == s);
}

TEST_CASE("residual after a step lies in (0, 1]") {
  RotationParams p = alphas(-3, 7, 5, 4);
  Z4 s{0, 0, 0, 0};
  for (int i = 0; i < 50; ++i) {
    Z4 t = step_T(s, p);
    Scalar r = rotation_residual({s[0], s[1], s[2], s[3], t[3]}, p);
    CHECK(r.sign() > 0);
    CHECK((r - Scalar(1)).sign() <= 0);
    s = t;
  }
}

TEST_CASE("origin orbits") {
  OrbitRecord r = orbit_from_origin(alphas(-1, 1, 1, 1), 50000);
  CHECK(r.status == OrbitStatus::periodic);
  CHECK(r.period == std::size_t{6});
  CHECK(r.ks == std::vector<Integer>{1, 1, 0, 0, 0, 0});

  OrbitRecord kept = orbit_from_origin(alphas(-1, 1, 1, 1), 50000, 2);
  CHECK(kept.ks.size() == 2);
  CHECK(kept.period == std::size_t{6});

  OrbitRecord diag = orbit_from_origin(alphas(1, 1, 1, 1), 50000);
  CHECK(diag.status == OrbitStatus::cap_exceeded);
  CHECK_FALSE(diag.period.has_value());
  CHECK(diag.iterations == 50000);

  CHECK(orbit_from_origin(alphas(-7, 10, -7, 10), 50000).period == std::size_t{59});
  CHECK(orbit_from_origin(alphas(-1, 4, -1, 4), 50000).period == std::size_t{110});
  CHECK(orbit_from_origin(alphas(-1, 2, -1, 2), 50000).status == OrbitStatus::cap_exceeded);
}

TEST_CASE("machine-integer period agrees with the exact orbit") {
  for (auto p : {alphas(-1, 1, 1, 1), alphas(-3, 7, 5, 4), alphas(-7, 10, -7, 10), alphas(1, 3, -9, 5)}) {
    OrbitRecord r = orbit_from_origin(p, 20000, 0);
    CHECK(origin_period(p, 20000) == r.period);
  }
}

TEST_CASE("shifted-addition search") {
  CHECK(shifted_addition_search(alphas(-1, 1, 1, 1), 1000) == int_poly({1, 1}));
  RotationParams r8{Scalar(make_rational(-4, 3)), Scalar(make_rational(4, 3))};
  CHECK(shifted_addition_search(r8, 1000) == builtin_r("R8"));
  CHECK_FALSE(shifted_addition_search(alphas(0, 1, 0, 1), 5000).has_value());
}

TEST_CASE("two-dimensional recursion") {
  CHECK(step_srs2({1, 0}, Scalar(0)) == std::array<Integer, 2>{0, -1});
  for (auto seed : {std::array<Integer, 2>{1, 0}, std::array<Integer, 2>{3, -5}, std::array<Integer, 2>{0, 2}})
    CHECK(srs2_period(seed, Scalar(0), 100) == std::size_t{4});
  CHECK(srs2_period({1, 0}, Scalar(1), 1000).has_value());
  CHECK(srs2_period({1, 0}, Scalar(-1), 1000).has_value());
}

#include "salemparry/rotation.hpp"

#include <cstdint>
#include <cstdlib>

namespace salem {

RotationParams RotationParams::from_alphas(const Scalar& alpha1, const Scalar& alpha2) {
  return {alpha1 + alpha2, alpha1 * alpha2 + Scalar(2)};
}

bool RotationParams::admissible() const {
  Scalar abs_c1 = c1.sign() < 0 ? -c1 : c1;
  Scalar quarter_sq = c1 * c1 * Scalar(Rational(1, 4));
  return c2 > Scalar(2) * abs_c1 - Scalar(2) && c2 - Scalar(2) < quarter_sq && quarter_sq < Scalar(4);
}

namespace {

Integer next_k(const Integer& k0, const Integer& k1, const Integer& k2, const Integer& k3, const RotationParams& p) {
  if (p.is_rational()) {
    Rational v = p.c1.rational() * (k3 + k1) + p.c2.rational() * k2 + (k0 - 1);
    return -ceil(v);
  }
  Scalar v = p.c1 * Scalar(Rational(k3 + k1)) + p.c2 * Scalar(Rational(k2)) + Scalar(Rational(k0 - 1));
  return -v.ceil();
}

}  // namespace

Z4 step_T(const Z4& s, const RotationParams& params) {
  return {s[1], s[2], s[3], next_k(s[0], s[1], s[2], s[3], params)};
}

Z4 step_T_inverse(const Z4& s, const RotationParams& params) {
  // The defining inequality is symmetric under reversing (k0..k4).
  return {next_k(s[3], s[2], s[1], s[0], params), s[0], s[1], s[2]};
}

Scalar rotation_residual(const std::array<Integer, 5>& k, const RotationParams& p) {
  return Scalar(Rational(k[4])) + p.c1 * Scalar(Rational(k[3] + k[1])) + p.c2 * Scalar(Rational(k[2])) +
         Scalar(Rational(k[0]));
}

OrbitRecord orbit_from_origin(const RotationParams& params, std::size_t cap, std::size_t keep) {
  OrbitRecord rec;
  Z4 state{};
  while (rec.iterations < cap) {
    state = step_T(state, params);
    ++rec.iterations;
    if (rec.ks.size() < keep) rec.ks.push_back(state[3]);
    if (state[0] == 0 && state[1] == 0 && state[2] == 0 && state[3] == 0) {
      rec.period = rec.iterations;
      rec.status = OrbitStatus::periodic;
      break;
    }
  }
  return rec;
}

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool fits(const Integer& z) { return z.fits_slong_p() && std::labs(z.get_si()) < (1L << 40); }

}  // namespace

std::optional<std::size_t> origin_period(const RotationParams& params, std::size_t cap) {
  if (params.is_rational()) {
    Rational c1 = params.c1.rational(), c2 = params.c2.rational();
    Integer den = lcm(c1.get_den(), c2.get_den());
    Integer n1 = c1.get_num() * (den / c1.get_den());
    Integer n2 = c2.get_num() * (den / c2.get_den());
    if (fits(den) && fits(n1) && fits(n2)) {
      const i128 d = den.get_si(), a = n1.get_si(), b = n2.get_si();
      const long limit = 1L << 40;
      long k0 = 0, k1 = 0, k2 = 0, k3 = 0;
      for (std::size_t n = 1; n <= cap; ++n) {
        i128 num = a * (k3 + k1) + b * k2 + d * (k0 - 1);
        // -ceil(num/d) = floor(-num/d)
        i128 k4 = floor_div(-num, d);
        if (k4 > limit || k4 < -limit) return orbit_from_origin(params, cap, 0).period;
        k0 = k1;
        k1 = k2;
        k2 = k3;
        k3 = static_cast<long>(k4);
        if (k0 == 0 && k1 == 0 && k2 == 0 && k3 == 0) return n;
      }
      return std::nullopt;
    }
  }
  return orbit_from_origin(params, cap, 0).period;
}

std::optional<IntPolynomial> shifted_addition_search(const RotationParams& params, std::size_t cap) {
  std::array<Scalar, 4> t{params.c1, params.c2, params.c1, Scalar(1)};
  std::vector<Integer> ks{Integer(1)};
  auto in_unit = [](const Scalar& s) { return s.sign() > 0 && s <= Scalar(1); };
  for (std::size_t n = 0; n <= cap; ++n) {
    if (in_unit(t[0]) && in_unit(t[1]) && in_unit(t[2]) && t[3] == Scalar(1)) return IntPolynomial(ks);
    Integer k = -(t[0] - Scalar(1)).ceil();
    Scalar ks_{k};
    t = {t[1] + params.c1 * ks_, t[2] + params.c2 * ks_, t[3] + params.c1 * ks_, ks_};
    ks.push_back(k);
  }
  return std::nullopt;
}

std::array<Integer, 2> step_srs2(const std::array<Integer, 2>& s, const Scalar& lambda) {
  Scalar v = lambda * Scalar(Rational(s[1])) + Scalar(Rational(s[0]));
  return {s[1], -v.floor()};
}

std::optional<std::size_t> srs2_period(const std::array<Integer, 2>& seed, const Scalar& lambda, std::size_t cap) {
  std::array<Integer, 2> s = seed;
  for (std::size_t n = 1; n <= cap; ++n) {
    s = step_srs2(s, lambda);
    if (s == seed) return n;
  }
  return std::nullopt;
}

std::string to_string(OrbitStatus s) { return s == OrbitStatus::periodic ? "periodic" : "cap-exceeded"; }

}  // namespace salem

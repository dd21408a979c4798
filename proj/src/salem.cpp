#include "salemparry/salem.hpp"

#include <cstdlib>

#include "salemparry/matrix.hpp"
#include "salemparry/sturm.hpp"

namespace salem {

namespace {

IntPolynomial negate_variable(const IntPolynomial& p) {
  std::vector<Integer> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool has_cyclotomic_factor(const IntPolynomial& p) {
  const unsigned long deg = static_cast<unsigned long>(p.degree());
  // phi(k) >= sqrt(k/2), so phi(k) <= deg forces k <= 2 deg^2.
  const unsigned long limit = 2 * deg * deg;
  for (unsigned long k = 1; k <= limit; ++k) {
    if (euler_phi(k) > deg) continue;
    IntPolynomial r = power_mod(p, k) - int_poly({1});
    if (r.is_zero() || gcd(p, r).degree() >= 1) return true;
  }
  return false;
}

SalemVerdict reject(const char* reason) {
  SalemVerdict v;
  v.reason = reason;
  return v;
}

}  // namespace

SalemVerdict classify_salem(const IntPolynomial& p) {
  if (!p.is_monic()) throw DomainError("classify_salem needs a monic polynomial");
  if (p.degree() % 2 != 0) return reject("odd-degree");
  if (p.degree() < 4) return reject("degree-too-small");
  if (!is_self_reciprocal(p)) return reject("not-self-reciprocal");
  const int d = p.degree() / 2;
  IntPolynomial g = trace_polynomial(p);
  if (sign_at(g, Rational(2)) >= 0) return reject("trace-at-two-nonnegative");
  if (sturm_root_count(g, Rational(-2), Rational(2)) != d - 1) return reject("unimodular-count");
  if (has_cyclotomic_factor(p)) return reject("cyclotomic-factor");

  auto beta_roots = isolate_real_roots(p);
  auto g_roots = isolate_real_roots(g);
  std::vector<RealAlgebraic> alphas;
  for (auto& r : isolate_real_roots(negate_variable(g)))
    if (compare(r, Rational(-2)) > 0 && compare(r, Rational(2)) < 0) alphas.push_back(r);
  SalemVerdict v;
  v.salem = true;
  v.reason = "salem";
  v.data = SalemData{p, g, beta_roots.back(), g_roots.back(), std::move(alphas)};
  return v;
}

SalemData salem_data(const IntPolynomial& p) {
  SalemVerdict v = classify_salem(p);
  if (!v.salem) throw DomainError("not a Salem polynomial: " + v.reason);
  return std::move(*v.data);
}

IntPolynomial chebyshev_power(unsigned long m) {
  // a_0 = -2, a_1 = y, a_{k+1} = -y a_k - a_{k-1}.
  IntPolynomial prev = int_poly({-2});
  IntPolynomial cur = IntPolynomial::x();
  if (m == 0) return prev;
  for (unsigned long k = 1; k < m; ++k) {
    IntPolynomial next = -(IntPolynomial::x() * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Scalar> power_conjugate_scalars(const SalemData& s, unsigned long m) {
  if (m == 0) throw DomainError("power must be positive");
  std::vector<Scalar> out;
  for (const auto& alpha : s.alphas) {
    Scalar a = Scalar::generator(alpha);
    Scalar prev(-2), cur = a;
    for (unsigned long k = 1; k < m; ++k) {
      Scalar next = -(a * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.push_back(cur);
  }
  return out;
}

std::vector<RealAlgebraic> power_conjugate_point(const SalemData& s, unsigned long m) {
  if (m == 1) return s.alphas;
  std::vector<Scalar> values = power_conjugate_scalars(s, m);
  IntPolynomial gm = negate_variable(trace_polynomial(power_polynomial(s.minpoly, m)));
  std::vector<RealAlgebraic> roots = isolate_real_roots(gm);
  std::vector<RealAlgebraic> out;
  for (const Scalar& v : values) {
    Rational width(1, 16);
    while (true) {
      RationalInterval e = v.enclose(width);
      int hits = 0;
      const RealAlgebraic* hit = nullptr;
      for (const auto& r : roots) {
        r.refine_to_width(width);
        RationalInterval ri = r.interval();
        if (ri.hi >= e.lo && ri.lo <= e.hi) {
          ++hits;
          hit = &r;
        }
      }
      if (hits == 1) {
        out.push_back(*hit);
        break;
      }
      if (hits == 0) throw std::logic_error("conjugate of beta^m not found among trace roots");
      width /= 1024;
    }
    if (compare(out.back(), Rational(-2)) <= 0 || compare(out.back(), Rational(2)) >= 0)
      throw std::logic_error("conjugate of beta^m left (-2, 2)");
  }
  return out;
}

SexticShape sextic_shape(const IntPolynomial& p) {
  if (p.degree() != 6 || !p.is_monic() || !is_self_reciprocal(p))
    throw DomainError("expected x^6 - a x^5 - b x^4 - c x^3 - b x^2 - a x + 1");
  return {-p[5], -p[4], -p[3]};
}

IntPolynomial make_sextic(const Integer& a, const Integer& b, const Integer& c) {
  return IntPolynomial(std::vector<Integer>{1, -a, -b, -c, -b, -a, 1});
}

WellPosedReport well_posed_sextic(const IntPolynomial& p) {
  SexticShape s = sextic_shape(p);
  WellPosedReport r;
  r.sum_condition = 2 - 2 * s.b < 2 * s.a + s.c;
  r.product_condition = s.c < 2 * s.a;
  Integer spread = abs(Integer(s.b + 2));
  r.spread_condition = spread < s.c - s.a;
  if (!r.sum_condition) r.failed.push_back("2-2b<2a+c");
  if (!r.product_condition) r.failed.push_back("c<2a");
  if (!r.spread_condition) r.failed.push_back("|b+2|<c-a");
  r.well_posed = r.sum_condition && r.product_condition && r.spread_condition;

  IntPolynomial q = trace_polynomial(p);
  auto nonroot = [&](long v) { return sign_at(q, Rational(v)) != 0; };
  if (nonroot(-1) && nonroot(0) && nonroot(1) && nonroot(2)) {
    r.roots_placed = sturm_root_count(q, -1, 0) == 1 && sturm_root_count(q, 0, 1) == 1 &&
                     sturm_root_count(q, 1, 2) == 0 && sign_at(q, Rational(2)) < 0;
  }
  return r;
}

std::pair<Scalar, Scalar> sextic_rotation_coordinates(const SalemData& s) {
  if (s.minpoly.degree() != 6) throw DomainError("rotation coordinates need a sextic");
  // Roots of G are gamma, -alpha_1, -alpha_2, so alpha_1 + alpha_2 = gamma + p5
  // and alpha_1 alpha_2 = p4 - 3 + gamma (alpha_1 + alpha_2).
  Scalar gamma = Scalar::generator(s.gamma);
  Scalar c1 = gamma + Scalar(Rational(s.minpoly[5]));
  Scalar c2 = Scalar(Rational(s.minpoly[4] - 1)) + gamma * c1;
  return {c1, c2};
}

}  // namespace salem

#ifndef SALEMPARRY_SALEM_HPP
#define SALEMPARRY_SALEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "salemparry/real_algebraic.hpp"
#include "salemparry/scalar.hpp"

namespace salem {

/*
  Conjugate data of a Salem number beta with minimal polynomial P of
  degree 2d. P factors over R as (x^2 - gamma x + 1) prod (x^2 + alpha_i x + 1)
  with alpha_i = -2 cos(theta_i) in (-2, 2).
*/
struct SalemData {
  IntPolynomial minpoly;
  IntPolynomial trace;  // G with P(x) = x^d G(x + 1/x); roots gamma and -alpha_i
  RealAlgebraic beta;
  RealAlgebraic gamma;
  std::vector<RealAlgebraic> alphas;  // ascending

  int half_degree() const { return minpoly.degree() / 2; }
};

struct SalemVerdict {
  bool salem = false;
  /// "salem", "odd-degree", "degree-too-small", "not-self-reciprocal",
  /// "trace-at-two-nonnegative", "unimodular-count", "cyclotomic-factor".
  std::string reason;
  std::optional<SalemData> data;
};

/// Decides whether a monic integer polynomial is the minimal polynomial of
/// a Salem number. Throws DomainError when p is not monic.
SalemVerdict classify_salem(const IntPolynomial& p);

/// classify_salem that throws DomainError unless p is Salem.
SalemData salem_data(const IntPolynomial& p);

/// Polynomial T_m with -2cos(m t) = T_m(-2cos t).
IntPolynomial chebyshev_power(unsigned long m);

/// -2cos(m theta_i) for each conjugate angle, as elements of Q(alpha_i).
std::vector<Scalar> power_conjugate_scalars(const SalemData& s, unsigned long m);

/// Conjugate coordinates of beta^m as real algebraic numbers (roots of the
/// trace polynomial of the minimal polynomial of beta^m), in the same order
/// as s.alphas.
std::vector<RealAlgebraic> power_conjugate_point(const SalemData& s, unsigned long m);

/// Sextic shape x^6 - a x^5 - b x^4 - c x^3 - b x^2 - a x + 1.
struct SexticShape {
  Integer a, b, c;
};
SexticShape sextic_shape(const IntPolynomial& p);
IntPolynomial make_sextic(const Integer& a, const Integer& b, const Integer& c);

struct WellPosedReport {
  bool well_posed = false;
  bool sum_condition = false;      // 2 - 2b < 2a + c
  bool product_condition = false;  // c < 2a
  bool spread_condition = false;   // |b + 2| < c - a
  /// Sturm-count check of -1 < alpha_1 < 0 < alpha_2 < 1 < 2 < gamma.
  bool roots_placed = false;
  std::vector<std::string> failed;
};

/// Throws DomainError when p does not have the sextic shape.
WellPosedReport well_posed_sextic(const IntPolynomial& p);

/// (c1, c2) = (alpha_1 + alpha_2, alpha_1 alpha_2 + 2) of a sextic Salem
/// number, as elements of Q(gamma).
std::pair<Scalar, Scalar> sextic_rotation_coordinates(const SalemData& s);

}  // namespace salem

#endif

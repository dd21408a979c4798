#ifndef SALEMPARRY_BOUNDARY_HPP
#define SALEMPARRY_BOUNDARY_HPP

#include <array>
#include <string>
#include <vector>

#include "salemparry/cells.hpp"
#include "salemparry/quadratic_irrational.hpp"

namespace salem {

/*
  A boundary piece of a cell drawn in the (alpha1, alpha2) = (x, y) plane on
  the branch y < x. The curve is k0 + kx x + ky y + kxy xy = 0 (primitive,
  first nonzero of kxy, ky, kx, k0 positive); the cell lies above it
  (lower = true) or below it for x between x_lo and x_hi.
*/
struct AlphaPiece {
  std::array<Integer, 4> curve;  // k0, kx, ky, kxy
  bool lower = true;
  bool strict = false;
  QuadraticIrrational x_lo, x_hi;

  /// y as a function of x, e.g. "-(3+2x)/(2+2x)".
  std::string curve_text() const;
  std::string to_string() const;
};

bool same_piece(const AlphaPiece& a, const AlphaPiece& b);

/// Pieces of every non-domain edge of the cell closure, restricted to the
/// part strictly below the parabola, sorted by curve then x_lo. Vertical
/// pieces (x constant) are dropped.
std::vector<AlphaPiece> alpha_boundary(const PeriodCell& cell);

/// Normal form of a curve given as y = (n0 + n1 x) / (d0 + d1 x).
std::array<Integer, 4> curve_from_fraction(const Rational& n0, const Rational& n1, const Rational& d0,
                                           const Rational& d1);

/*
  A boundary edge in the (c1, c2) chart solved for c1:
  k0 + k1 c1 + k2 c2 = 0 with k1 > 0 and primitive coefficients; the cell
  lies at larger c1 (lower = true) or smaller c1 for c2 in [c2_lo, c2_hi].
*/
struct CEdge {
  std::array<Integer, 3> line;
  bool lower = true;
  bool strict = false;
  Rational c2_lo, c2_hi;

  std::string to_string() const;
};

/// Non-domain edges of the closure that are not parallel to the c1 axis.
std::vector<CEdge> c_boundary(const PeriodCell& cell);

}  // namespace salem

#endif

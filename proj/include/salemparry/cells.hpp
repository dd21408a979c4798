#ifndef SALEMPARRY_CELLS_HPP
#define SALEMPARRY_CELLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "salemparry/expansion.hpp"
#include "salemparry/rotation.hpp"
#include "salemparry/salem.hpp"

namespace salem {

/// a0 + a1 c1 + a2 c2 with integer coefficients.
struct LinearForm {
  Integer a0, a1, a2;

  bool is_constant() const { return a1 == 0 && a2 == 0; }
  Rational eval(const Rational& c1, const Rational& c2) const { return a0 + a1 * c1 + a2 * c2; }
  Scalar eval(const Scalar& c1, const Scalar& c2) const;

  friend LinearForm operator+(const LinearForm& x, const LinearForm& y) { return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2}; }
  friend LinearForm operator-(const LinearForm& x, const LinearForm& y) { return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2}; }
  friend bool operator==(const LinearForm& x, const LinearForm& y) {
    return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2;
  }
};

std::string to_string(const LinearForm& f);

/// Coefficients g_0 .. g_{n+4} of (x^4 + c1 x^3 + c2 x^2 + c1 x + 1) R(x) as
/// forms in (c1, c2). Throws DomainError unless R(0) = 1.
std::vector<LinearForm> symbolic_g(const IntPolynomial& r);

struct CPoint {
  Rational c1, c2;
  friend bool operator==(const CPoint& a, const CPoint& b) { return a.c1 == b.c1 && a.c2 == b.c2; }
};

/// form > 0 (strict) or form >= 0.
struct HalfPlane {
  LinearForm form;
  bool strict = false;
};

/// Convex polygon (counter-clockwise, no repeated vertices) cut out of the
/// closed triangle {c2 >= 2|c1| - 2, c2 <= 6} by the closures of the
/// half-planes. Empty when the closed intersection is empty.
std::vector<CPoint> clip_polygon(const std::vector<HalfPlane>& halfplanes);
Rational polygon_area(const std::vector<CPoint>& poly);

/// The admissible domain: c2 > 2c1 - 2, c2 > -2c1 - 2, c2 < c1^2/4 + 2.
std::vector<HalfPlane> domain_halfplanes();
bool below_parabola(const CPoint& p);

enum class CellStatus { cell, degenerate, empty };
std::string to_string(CellStatus s);

/// Side conditions for an index i with g_i = 1: h = g_{i-1} + g_{i+1} - g_1
/// positive, or h = 0 and g_1 - g_{i+1} positive.
struct OneIndexCheck {
  std::size_t index = 0;
  LinearForm sum_excess;  // h
  LinearForm gap;         // g_1 - g_{i+1}
  bool holds = false;
};

struct PeriodCell {
  std::string name;
  IntPolynomial r;
  std::vector<LinearForm> forms;        // g_0 .. g_{n+4}
  std::vector<std::size_t> one_indices;  // interior i with g_i identically 1
  std::vector<HalfPlane> constraints;    // 0 < g_i and g_i <= 1 for non-constant g_i
  std::vector<CPoint> polygon;           // closure in the (c1, c2) chart
  CellStatus status = CellStatus::empty;
  bool symmetric = true;  // the mirror image across the diagonal also belongs
  std::vector<OneIndexCheck> one_checks;
  bool side_conditions_hold = true;

  std::size_t orbit_period() const { return static_cast<std::size_t>(r.degree()) + 5; }
  /// Non-constant interior forms.
  std::vector<LinearForm> varying_forms() const;
};

/// Builds the cell of R from 0 < g_i <= 1 and the domain constraints.
PeriodCell derive_cell(const IntPolynomial& r, const std::string& name = "");

/// Membership of (c1, c2): 0 < g_i <= 1 for non-constant forms and the
/// point in the admissible domain.
bool in_cell(const PeriodCell& cell, const Scalar& c1, const Scalar& c2);
bool in_cell(const PeriodCell& cell, const Rational& c1, const Rational& c2);

std::optional<std::size_t> locate_point(const RotationParams& params, const std::vector<PeriodCell>& cells);
std::optional<std::size_t> locate_point(const Rational& alpha1, const Rational& alpha2,
                                        const std::vector<PeriodCell>& cells);

struct DisjointnessResult {
  bool disjoint = true;
  std::optional<CPoint> witness;  // common interior point when not disjoint
};

/// Decides whether the open interiors of two cells meet inside the domain.
DisjointnessResult cells_disjoint(const PeriodCell& a, const PeriodCell& b);

/// Interior point of the open cell strictly below the parabola, if any.
std::optional<CPoint> interior_point(const std::vector<HalfPlane>& halfplanes);

struct UVChoice {
  Rational u, v, threshold;  // threshold = max(2/u, 1/(1 - v))
};

/// u and v at a point of the cell; for irrational points u is a rational
/// lower bound and v an upper bound of the exact values. Throws
/// DomainError when the point is outside the cell or a side condition fails.
UVChoice choose_uv(const PeriodCell& cell, const Scalar& c1, const Scalar& c2);

struct ExpansionPrediction {
  std::vector<Integer> c;  // c_1 .. c_{N-1}, N = deg(R P)
  PeriodicWord word;       // c_1 (c_2 .. c_{N-2}, c_1 - 1, c_1 - 1)^inf
  std::optional<UVChoice> uv;
};

/// Digits c_i of f = R P = x^N + 1 - sum c_i x^i and the word they
/// predict, without checking the hypotheses.
ExpansionPrediction predicted_word(const IntPolynomial& p, const IntPolynomial& r);

/// Checked prediction for a sextic Salem number: its conjugate point must lie
/// in the cell and beta must exceed the threshold; throws DomainError
/// with a diagnostic otherwise.
ExpansionPrediction predict_expansion(const SalemData& s, const PeriodCell& cell);

}  // namespace salem

#endif

#ifndef SALEMPARRY_REAL_ALGEBRAIC_HPP
#define SALEMPARRY_REAL_ALGEBRAIC_HPP

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "salemparry/polynomial.hpp"

namespace salem {

/// Closed rational interval.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

/// Interval Horner evaluation of p over [x.lo, x.hi].
RationalInterval eval(const RatPolynomial& p, const RationalInterval& x);
RationalInterval eval(const IntPolynomial& p, const RationalInterval& x);

/*
  A real algebraic number: a square-free primitive integer polynomial and an
  open rational interval (lo, hi) holding exactly one of its roots, with
  p(lo) and p(hi) of opposite nonzero signs.

  Refinement only ever shrinks the interval. Copies share the refinement
  state, which is guarded by a mutex, so values can be used from several
  threads.
*/
class RealAlgebraic {
 public:
  /// Validates the isolation with a Sturm count; the polynomial is reduced
  /// to its square-free part.
  RealAlgebraic(const IntPolynomial& poly, const Rational& lo, const Rational& hi);

  static RealAlgebraic from_rational(const Rational& r);

  const IntPolynomial& minpoly() const { return state_->poly; }
  RationalInterval interval() const;

  /// Halve the isolating interval `halvings` times.
  void refine(int halvings = 1) const;
  void refine_to_width(const Rational& width) const;

  /// Exact rational value when the defining polynomial is linear.
  bool is_rational() const { return state_->poly.degree() == 1; }
  Rational rational_value() const;

  double approx() const;

  /// True when both objects share refinement state (same construction).
  bool same_object(const RealAlgebraic& o) const { return state_ == o.state_; }

 private:
  struct State {
    IntPolynomial poly;
    std::mutex mutex;
    Rational lo, hi;
    int sign_lo = 0;
  };
  explicit RealAlgebraic(std::shared_ptr<State> s) : state_(std::move(s)) {}
  friend std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial&);

  std::shared_ptr<State> state_;
};

/// One value per distinct real root, ascending, pairwise disjoint intervals.
std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p);

/// Exact sign of q(beta). Zero is decided algebraically (gcd with the
/// defining polynomial), never by interval width.
int alg_sign(const RatPolynomial& q, const RealAlgebraic& beta);
int alg_sign(const IntPolynomial& q, const RealAlgebraic& beta);

Integer alg_floor(const RatPolynomial& q, const RealAlgebraic& beta);
Integer alg_ceil(const RatPolynomial& q, const RealAlgebraic& beta);

/// Sign of beta - r.
int compare(const RealAlgebraic& beta, const Rational& r);

/// Interval for q(beta) of width at most `width`.
RationalInterval enclose(const RatPolynomial& q, const RealAlgebraic& beta, const Rational& width);

}  // namespace salem

#endif

#ifndef SALEMPARRY_SCALAR_HPP
#define SALEMPARRY_SCALAR_HPP

#include <optional>
#include <string>

#include "salemparry/real_algebraic.hpp"

namespace salem {

/*
  An exact real number that is either rational or an element q(base) of
  Q(base) for a RealAlgebraic base. Arithmetic between two non-rational
  scalars requires the same base object.
*/
class Scalar {
 public:
  Scalar() : q_(RatPolynomial{}) {}
  Scalar(const Rational& r) : q_(RatPolynomial::constant(r)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(const Integer& z) : Scalar(Rational(z)) {}
  Scalar(const RatPolynomial& q, const RealAlgebraic& base);

  /// The base itself, as an element of Q(base).
  static Scalar generator(const RealAlgebraic& base);

  bool is_rational() const { return !base_ || q_.degree() <= 0; }
  Rational rational() const;
  const std::optional<RealAlgebraic>& base() const { return base_; }
  /// Representative polynomial, reduced modulo the base's polynomial.
  const RatPolynomial& poly() const { return q_; }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  double approx() const;
  RationalInterval enclose(const Rational& width) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Exact comparisons via the sign of the difference.
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).sign() == 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

 private:
  static const std::optional<RealAlgebraic>& common_base(const Scalar& a, const Scalar& b);

  std::optional<RealAlgebraic> base_;
  RatPolynomial q_;
};

/// Rational lower and upper bounds of the value (tight within `width`).
Rational lower_bound(const Scalar& s, const Rational& width);
Rational upper_bound(const Scalar& s, const Rational& width);

}  // namespace salem

#endif

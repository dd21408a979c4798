#ifndef SALEMPARRY_QUADRATIC_IRRATIONAL_HPP
#define SALEMPARRY_QUADRATIC_IRRATIONAL_HPP

#include <string>

#include "salemparry/numeric.hpp"

namespace salem {

/*
  a + b sqrt(d) with rational a, b and square-free d >= 1. The form is
  canonical (b = 0 forces d = 1, d = 1 folds into a), so structural
  equality is value equality.
*/
class QuadraticIrrational {
 public:
  QuadraticIrrational() : a_(0), b_(0), d_(1) {}
  QuadraticIrrational(const Rational& a) : a_(a), b_(0), d_(1) {}
  /// a + b sqrt(r) for a nonnegative rational r.
  QuadraticIrrational(const Rational& a, const Rational& b, const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const;
  double approx() const;
  std::string to_string() const;

  QuadraticIrrational operator+(const Rational& r) const;
  QuadraticIrrational operator*(const Rational& r) const;

  friend int compare(const QuadraticIrrational& x, const QuadraticIrrational& y);
  friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadraticIrrational& x, const QuadraticIrrational& y) { return !(x == y); }
  friend bool operator<(const QuadraticIrrational& x, const QuadraticIrrational& y) { return compare(x, y) < 0; }

 private:
  Rational a_, b_;
  Integer d_;
};

/// Splits n >= 1 as s^2 * f with f square-free; returns {s, f}.
std::pair<Integer, Integer> square_free_split(const Integer& n);

/// Sign of a + b sqrt(d) + c sqrt(e) for d, e >= 0.
int sign_of_sum(const Rational& a, const Rational& b, const Integer& d, const Rational& c, const Integer& e);

}  // namespace salem

#endif

#ifndef SALEMPARRY_POLYNOMIAL_HPP
#define SALEMPARRY_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salemparry/numeric.hpp"

namespace salem {

/*
  Dense univariate polynomial. coeffs()[i] is the coefficient of x^i.
  The representation is always trimmed: the zero polynomial has no
  coefficients and otherwise the last stored coefficient is nonzero.
*/
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  static Polynomial monomial(const T& value, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = value;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i, zero beyond the degree.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// Coefficients reversed: x^deg * p(1/x).
  Polynomial reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  Polynomial& operator+=(const Polynomial& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), T(0));
    for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] += q.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    if (q.c_.size() > c_.size()) c_.resize(q.c_.size(), T(0));
    for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] -= q.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

IntPolynomial int_poly(std::initializer_list<long> coeffs);
RatPolynomial to_rational(const IntPolynomial& p);

/// Scales by a positive rational so the result has coprime integer
/// coefficients. Signs are preserved, which Sturm sequences rely on.
IntPolynomial primitive_part(const RatPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);
Integer content(const IntPolynomial& p);

/// Euclidean division over Q. Throws DomainError on a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b);

/// Division by a monic integer polynomial stays in Z[x].
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& monic);
IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// Monic gcd over Q (zero if both are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), made primitive with positive leading coefficient.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Sign of p(r) without forming the rational value.
int sign_at(const IntPolynomial& p, const Rational& r);
Rational eval(const IntPolynomial& p, const Rational& r);
Rational eval(const RatPolynomial& p, const Rational& r);

bool is_self_reciprocal(const IntPolynomial& p);

/// Trace polynomial G with p(x) = x^d G(x + 1/x) for a self-reciprocal p of
/// degree 2d. Throws DomainError on odd degree or non-reciprocal input.
IntPolynomial trace_polynomial(const IntPolynomial& p);
RatPolynomial trace_polynomial(const RatPolynomial& p);

/// x^d G(x + 1/x) for deg G = d; inverse of trace_polynomial.
IntPolynomial from_trace_polynomial(const IntPolynomial& g);

/// Cyclotomic polynomial Phi_n.
IntPolynomial cyclotomic(unsigned n);

/// Parses "[c0, c1, ..., cn]" (constant term first). Errors report the
/// character offset of the problem.
IntPolynomial parse_int_polynomial(std::string_view text);
std::string to_json_list(const IntPolynomial& p);

/// Human-readable form such as "x^2 - x - 1".
std::string to_pretty(const IntPolynomial& p, char var = 'x');

}  // namespace salem

#endif

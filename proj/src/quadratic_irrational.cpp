#include "salemparry/quadratic_irrational.hpp"

#include <cmath>
#include <sstream>

namespace salem {

std::pair<Integer, Integer> square_free_split(const Integer& n) {
  if (sgn(n) <= 0) throw DomainError("square-free split needs a positive integer");
  Integer rest = n, s = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    return {s, Integer(1)};
  }
  Integer f = 1;
  for (unsigned long p = 2; p < 1000000; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        s *= p;
      } else {
        f *= p;
      }
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    s *= r;
  } else {
    f *= rest;
  }
  return {s, f};
}

QuadraticIrrational::QuadraticIrrational(const Rational& a, const Rational& b, const Rational& r)
    : a_(a), b_(b), d_(1) {
  if (sgn(r) < 0) throw DomainError("square root of a negative rational");
  if (sgn(b_) == 0 || sgn(r) == 0) {
    b_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p q) / q
  Integer pq = r.get_num() * r.get_den();
  auto [s, f] = square_free_split(pq);
  b_ = b_ * Rational(s) / Rational(r.get_den());
  if (f == 1) {
    a_ += b_;
    b_ = 0;
  } else {
    d_ = f;
  }
}

int sign_of_sum(const Rational& a, const Rational& b, const Integer& d, const Rational& c, const Integer& e) {
  // X = b sqrt(d) + c sqrt(e)
  auto sign_x = [&]() {
    int sb = sgn(b) * (sgn(d) > 0 ? 1 : 0), sc = sgn(c) * (sgn(e) > 0 ? 1 : 0);
    if (sb == 0) return sc;
    if (sc == 0 || sb == sc) return sb;
    int cmpv = cmp(Rational(b * b * d), Rational(c * c * e));
    return cmpv == 0 ? 0 : (cmpv > 0 ? sb : sc);
  };
  int sx = sign_x(), sa = sgn(a);
  if (sx == 0) return sa;
  if (sa == 0 || sa == sx) return sx;
  // a and X of opposite signs: compare a^2 with X^2 = b^2 d + c^2 e + 2bc sqrt(de).
  Rational r = a * a - b * b * d - c * c * e;
  Rational s = -2 * b * c;
  Integer de = d * e;
  int sr = sgn(r), ss = sgn(s) * (sgn(de) > 0 ? 1 : 0);
  int sq;  // sign of a^2 - X^2 = r + s sqrt(de)
  if (ss == 0) sq = sr;
  else if (sr == 0 || sr == ss) sq = ss;
  else {
    int c2 = cmp(Rational(r * r), Rational(s * s * de));
    sq = c2 == 0 ? 0 : (c2 > 0 ? sr : ss);
  }
  if (sq == 0) return 0;
  return sq > 0 ? sa : sx;
}

int QuadraticIrrational::sign() const { return sign_of_sum(a_, b_, d_, Rational(0), Integer(0)); }

int compare(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  return sign_of_sum(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
}

double QuadraticIrrational::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

QuadraticIrrational QuadraticIrrational::operator+(const Rational& r) const {
  QuadraticIrrational q = *this;
  q.a_ += r;
  return q;
}

QuadraticIrrational QuadraticIrrational::operator*(const Rational& r) const {
  QuadraticIrrational q = *this;
  q.a_ *= r;
  q.b_ *= r;
  if (sgn(q.b_) == 0) q.d_ = 1;
  return q;
}

std::string QuadraticIrrational::to_string() const {
  if (is_rational()) return salem::to_string(a_);
  std::ostringstream os;
  if (sgn(a_) != 0) os << salem::to_string(a_) << (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) os << '-';
  Rational mb = abs(b_);
  if (mb != 1) os << salem::to_string(mb) << '*';
  os << "sqrt(" << d_.get_str() << ')';
  return os.str();
}

}  // namespace salem

#include "salemparry/scalar.hpp"

namespace salem {

namespace {

RatPolynomial reduce(const RatPolynomial& q, const RealAlgebraic& base) {
  if (q.degree() < base.minpoly().degree()) return q;
  return remainder(q, to_rational(base.minpoly()));
}

}  // namespace

Scalar::Scalar(const RatPolynomial& q, const RealAlgebraic& base) : base_(base), q_(reduce(q, base)) {
  if (q_.degree() <= 0) base_.reset();
}

Scalar Scalar::generator(const RealAlgebraic& base) { return Scalar(RatPolynomial{Rational(0), Rational(1)}, base); }

Rational Scalar::rational() const {
  if (!is_rational()) throw DomainError("scalar is not rational");
  return q_.is_zero() ? Rational(0) : q_.leading();
}

const std::optional<RealAlgebraic>& Scalar::common_base(const Scalar& a, const Scalar& b) {
  if (!a.base_) return b.base_;
  if (!b.base_) return a.base_;
  if (!a.base_->same_object(*b.base_)) throw DomainError("scalars live over different algebraic bases");
  return a.base_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  const auto& base = Scalar::common_base(a, b);
  if (!base) return Scalar(a.rational() + b.rational());
  return Scalar(a.q_ + b.q_, *base);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  const auto& base = Scalar::common_base(a, b);
  if (!base) return Scalar(a.rational() - b.rational());
  return Scalar(a.q_ - b.q_, *base);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  const auto& base = Scalar::common_base(a, b);
  if (!base) return Scalar(a.rational() * b.rational());
  return Scalar(a.q_ * b.q_, *base);
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  r.q_ = -r.q_;
  return r;
}

int Scalar::sign() const {
  if (is_rational()) return sgn(rational());
  return alg_sign(q_, *base_);
}

Integer Scalar::floor() const {
  if (is_rational()) return salem::floor(rational());
  return alg_floor(q_, *base_);
}

Integer Scalar::ceil() const {
  if (is_rational()) return salem::ceil(rational());
  return alg_ceil(q_, *base_);
}

RationalInterval Scalar::enclose(const Rational& width) const {
  if (is_rational()) {
    Rational r = rational();
    return {r, r};
  }
  return salem::enclose(q_, *base_, width);
}

double Scalar::approx() const {
  RationalInterval iv = enclose(Rational(1, 1) / Rational(Integer(1) << 60));
  Rational mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

Rational lower_bound(const Scalar& s, const Rational& width) { return s.enclose(width).lo; }
Rational upper_bound(const Scalar& s, const Rational& width) { return s.enclose(width).hi; }

}  // namespace salem

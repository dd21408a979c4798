#include "salemparry/real_algebraic.hpp"

#include <algorithm>

#include "salemparry/sturm.hpp"

namespace salem {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0) return {a.lo * b.lo, a.hi * b.hi};
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

namespace {

template <class P>
RationalInterval horner(const P& p, const RationalInterval& x) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  const auto& c = p.coeffs();
  RationalInterval acc{Rational(c.back()), Rational(c.back())};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * x;
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

}  // namespace

RationalInterval eval(const RatPolynomial& p, const RationalInterval& x) { return horner(p, x); }
RationalInterval eval(const IntPolynomial& p, const RationalInterval& x) { return horner(p, x); }

RealAlgebraic::RealAlgebraic(const IntPolynomial& poly, const Rational& lo, const Rational& hi)
    : state_(std::make_shared<State>()) {
  if (poly.degree() < 1) throw DomainError("algebraic number needs a non-constant polynomial");
  if (!(lo < hi)) throw DomainError("isolating interval needs lo < hi");
  IntPolynomial sf = square_free_part(poly);
  int slo = sign_at(sf, lo), shi = sign_at(sf, hi);
  if (slo == 0 || shi == 0) throw DomainError("isolating interval endpoint is a root");
  if (SturmSequence(sf).count(lo, hi) != 1) throw DomainError("interval does not isolate exactly one root");
  state_->poly = std::move(sf);
  state_->lo = lo;
  state_->hi = hi;
  state_->sign_lo = slo;
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& r) {
  IntPolynomial p(std::vector<Integer>{-r.get_num(), r.get_den()});
  return RealAlgebraic(p, r - 1, r + 1);
}

RationalInterval RealAlgebraic::interval() const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  return {state_->lo, state_->hi};
}

Rational RealAlgebraic::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  const auto& c = state_->poly.coeffs();
  Rational r(-c[0], c[1]);
  r.canonicalize();
  return r;
}

void RealAlgebraic::refine(int halvings) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  State& s = *state_;
  if (s.poly.degree() == 1) {
    // Shrink around the exact value.
    const auto& c = s.poly.coeffs();
    Rational r(-c[0], c[1]);
    r.canonicalize();
    Rational w = (s.hi - s.lo) / 4;
    for (int i = 1; i < halvings; ++i) w /= 2;
    s.lo = r - w;
    s.hi = r + w;
    return;
  }
  for (int i = 0; i < halvings; ++i) {
    Rational mid = (s.lo + s.hi) / 2;
    int sm = sign_at(s.poly, mid);
    if (sm == 0) {
      Rational q = (s.hi - s.lo) / 4;
      s.lo = mid - q;
      s.hi = mid + q;
      s.sign_lo = sign_at(s.poly, s.lo);
    } else if (sm == s.sign_lo) {
      s.lo = std::move(mid);
    } else {
      s.hi = std::move(mid);
    }
  }
}

void RealAlgebraic::refine_to_width(const Rational& width) const {
  while (interval().width() > width) refine(4);
}

double RealAlgebraic::approx() const {
  refine_to_width(Rational(1) / Rational(Integer(1) << 60));
  RationalInterval iv = interval();
  Rational mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<RealAlgebraic> out;
  IntPolynomial sf = square_free_part(p);
  if (sf.degree() < 1) return out;
  SturmSequence sturm(sf);
  Integer bound = cauchy_bound(sf);

  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Job> stack;
  Rational lo0(-bound), hi0(bound);
  stack.push_back({lo0, hi0, sturm.variations(lo0), sturm.variations(hi0)});
  std::vector<std::pair<Rational, Rational>> found;
  while (!stack.empty()) {
    Job j = std::move(stack.back());
    stack.pop_back();
    int n = j.vlo - j.vhi;
    if (n == 0) continue;
    if (n == 1) {
      found.emplace_back(j.lo, j.hi);
      continue;
    }
    Rational mid = (j.lo + j.hi) / 2;
    Rational step = (j.hi - j.lo) / 4;
    while (sign_at(sf, mid) == 0) {
      step /= 2;
      mid += step;
    }
    int vm = sturm.variations(mid);
    stack.push_back({mid, j.hi, vm, j.vhi});
    stack.push_back({j.lo, mid, j.vlo, vm});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [lo, hi] : found) {
    auto st = std::make_shared<RealAlgebraic::State>();
    st->poly = sf;
    st->lo = lo;
    st->hi = hi;
    st->sign_lo = sign_at(sf, lo);
    out.push_back(RealAlgebraic(std::move(st)));
  }
  return out;
}

namespace {

bool is_root_of(const RatPolynomial& r, const RealAlgebraic& beta) {
  RatPolynomial g = gcd(r, to_rational(beta.minpoly()));
  if (g.degree() < 1) return false;
  IntPolynomial gi = primitive_part(g);
  RationalInterval iv = beta.interval();
  // Roots of g are roots of the square-free minpoly; the interval holds only beta.
  return sign_at(gi, iv.lo) * sign_at(gi, iv.hi) < 0;
}

}  // namespace

int alg_sign(const RatPolynomial& q, const RealAlgebraic& beta) {
  if (q.is_zero()) return 0;
  RatPolynomial r = q.degree() >= beta.minpoly().degree() ? remainder(q, to_rational(beta.minpoly())) : q;
  if (r.is_zero()) return 0;
  if (r.degree() == 0) return sgn(r.leading());
  RationalInterval v = eval(r, beta.interval());
  if (sgn(v.lo) > 0) return 1;
  if (sgn(v.hi) < 0) return -1;
  if (is_root_of(r, beta)) return 0;
  int halvings = 8;
  while (true) {
    beta.refine(halvings);
    v = eval(r, beta.interval());
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    halvings = std::min(halvings * 2, 512);
  }
}

int alg_sign(const IntPolynomial& q, const RealAlgebraic& beta) { return alg_sign(to_rational(q), beta); }

RationalInterval enclose(const RatPolynomial& q, const RealAlgebraic& beta, const Rational& width) {
  RatPolynomial r = q.degree() >= beta.minpoly().degree() ? remainder(q, to_rational(beta.minpoly())) : q;
  if (r.degree() <= 0) {
    Rational c = r.is_zero() ? Rational(0) : r.leading();
    return {c, c};
  }
  RationalInterval v = eval(r, beta.interval());
  int halvings = 8;
  while (v.width() > width) {
    beta.refine(halvings);
    v = eval(r, beta.interval());
    halvings = std::min(halvings * 2, 512);
  }
  return v;
}

Integer alg_floor(const RatPolynomial& q, const RealAlgebraic& beta) {
  RationalInterval v = enclose(q, beta, Rational(1, 2));
  Integer k = floor(v.lo);
  while (alg_sign(q - RatPolynomial::constant(Rational(k + 1)), beta) >= 0) ++k;
  while (alg_sign(q - RatPolynomial::constant(Rational(k)), beta) < 0) --k;
  return k;
}

Integer alg_ceil(const RatPolynomial& q, const RealAlgebraic& beta) { return -alg_floor(-q, beta); }

int compare(const RealAlgebraic& beta, const Rational& r) {
  return alg_sign(RatPolynomial{-r, Rational(1)}, beta);
}

}  // namespace salem

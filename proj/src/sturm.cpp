#include "salemparry/sturm.hpp"

namespace salem {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  IntPolynomial s = square_free_part(p);
  chain_.push_back(s);
  if (s.degree() == 0) return;
  chain_.push_back(primitive_part(s.derivative()));
  while (chain_.back().degree() > 0) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RatPolynomial r = remainder(to_rational(a), to_rational(b));
    if (r.is_zero()) break;
    chain_.push_back(-primitive_part(r));
  }
}

int SturmSequence::variations(const Rational& r) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, r));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return count_variations(signs);
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations(lo) - variations(hi);
}

int SturmSequence::count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  return SturmSequence(p).count(lo, hi);
}

Integer cauchy_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  Integer m = 0;
  const Integer lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p.coeffs()[static_cast<std::size_t>(i)]);
    if (a > m) m = a;
  }
  // 1 + max|a_i| / |a_n|, rounded up, plus one for strictness.
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 2;
}

}  // namespace salem

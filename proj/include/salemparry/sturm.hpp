#ifndef SALEMPARRY_STURM_HPP
#define SALEMPARRY_STURM_HPP

#include <vector>

#include "salemparry/polynomial.hpp"

namespace salem {

/// Sturm chain of the square-free part of a polynomial, kept primitive
/// with positive scalings so sign variations are unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  /// Sign variations at r, zeros dropped.
  int variations(const Rational& r) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  /// Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int count_all() const;

  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi]. Endpoint roots are
/// handled exactly: a root at lo is excluded, a root at hi is included.
int sturm_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Integer bound B with every real root in (-B, B).
Integer cauchy_bound(const IntPolynomial& p);

}  // namespace salem

#endif

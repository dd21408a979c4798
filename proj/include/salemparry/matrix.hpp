#ifndef SALEMPARRY_MATRIX_HPP
#define SALEMPARRY_MATRIX_HPP

#include <vector>

#include "salemparry/polynomial.hpp"

namespace salem {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Integer trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_;
  std::vector<Integer> a_;
};

/// Companion matrix of a monic polynomial (multiplication by x on the
/// power basis).
IntMatrix companion(const IntPolynomial& monic);

/// Matrix of multiplication by r(x) on Z[x]/(monic).
IntMatrix multiplication_matrix(const IntPolynomial& r, const IntPolynomial& monic);

IntMatrix power(const IntMatrix& a, unsigned long m);

/// x^m reduced modulo a monic polynomial, by repeated squaring.
IntPolynomial power_mod(const IntPolynomial& monic, unsigned long m);

/// det(xI - A), exact (Faddeev-LeVerrier; all divisions are exact).
IntPolynomial characteristic_polynomial(const IntMatrix& a);

/// Characteristic polynomial of beta^m for beta a root of `monic`:
/// the polynomial whose roots are the m-th powers of the roots.
IntPolynomial power_polynomial(const IntPolynomial& monic, unsigned long m);

}  // namespace salem

#endif

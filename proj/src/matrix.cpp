#include "salemparry/matrix.hpp"

namespace salem {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix companion(const IntPolynomial& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw DomainError("companion matrix needs a monic polynomial");
  return multiplication_matrix(IntPolynomial::x(), monic);
}

IntMatrix multiplication_matrix(const IntPolynomial& r, const IntPolynomial& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw DomainError("multiplication matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  IntMatrix m(n);
  IntPolynomial col = remainder_monic(r, monic);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    col = remainder_monic(col.shifted(1), monic);
  }
  return m;
}

IntMatrix power(const IntMatrix& a, unsigned long m) {
  IntMatrix result = IntMatrix::identity(a.size());
  IntMatrix base = a;
  while (m > 0) {
    if (m & 1) result = result * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return result;
}

IntPolynomial power_mod(const IntPolynomial& monic, unsigned long m) {
  IntPolynomial result = remainder_monic(int_poly({1}), monic);
  IntPolynomial base = remainder_monic(IntPolynomial::x(), monic);
  while (m > 0) {
    if (m & 1) result = remainder_monic(result * base, monic);
    m >>= 1;
    if (m) base = remainder_monic(base * base, monic);
  }
  return result;
}

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.size();
  // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    Integer t = am.trace();
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), k);
    c[n - k] = -q;
    if (k < n) {
      m = am;
      for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial power_polynomial(const IntPolynomial& monic, unsigned long m) {
  if (m == 0) throw DomainError("power must be positive");
  return characteristic_polynomial(multiplication_matrix(power_mod(monic, m), monic));
}

}  // namespace salem

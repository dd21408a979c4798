#ifndef SALEMPARRY_VERIFY_HPP
#define SALEMPARRY_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "salemparry/cells.hpp"
#include "salemparry/quadratic_irrational.hpp"

namespace salem {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct VerificationReport {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string input;  // enough to reproduce the check
  std::map<std::string, std::string> details;
  std::vector<std::string> failures;  // one reproducible input per failure
};

/// Random self-reciprocal x^{2n} + sum d_i x^i + 1 with rational |d_i| < 1/(2n-2);
/// each must have all roots on the unit circle (n distinct trace roots in (-2, 2)).
VerificationReport verify_unit_circle(int n, int trials, std::uint64_t seed);

/// The same test for one coefficient list d_1 .. d_{2n-1}; skipped when the
/// list is not symmetric or violates the coefficient bound.
VerificationReport verify_unit_circle_instance(const std::vector<Rational>& d);

/// Number of distinct roots of the trace polynomial of a self-reciprocal
/// polynomial in the open interval (-2, 2).
int unimodular_trace_roots(const RatPolynomial& p);

/// One root of the trace polynomial of 4(n-1) h, h = x^{2n} + sum x^i / (4(n-1)) + 1,
/// in each interval (2cos(k pi/n), 2cos((k-1) pi/n)), k = 1..n.
VerificationReport verify_interlacing(int n);

struct PowerCheckOptions {
  unsigned long m_lo = 1, m_hi = 1;
  std::size_t cap = 1000000;
};

/// For each m: locate the conjugate point of beta^m in the cells and, when
/// beta^m exceeds the cell threshold, compare the predicted word with the
/// computed expansion of one. Below-threshold points are compared
/// informatively only.
VerificationReport verify_power_words(const IntPolynomial& p, const std::vector<PeriodCell>& cells, const PowerCheckOptions& opts);

/// The closed-form word for x^6 - a x^5 - b x^4 - c x^3 - b x^2 - a x + 1,
/// or nothing when neither case applies.
std::optional<PeriodicWord> closed_form_word(const Integer& a, const Integer& b, const Integer& c);

VerificationReport verify_closed_form(const Integer& a, const Integer& b, const Integer& c, std::size_t cap);

/// Every well-posed (a, b, c) with a <= a_max.
VerificationReport verify_closed_form_scan(long a_max, std::size_t cap);

struct DegeneratePoint {
  std::string cell;
  CPoint c;
  QuadraticIrrational alpha_small, alpha_large;
};

/// Cells whose closure meets the domain but have no interior, with their
/// closure vertices mapped to conjugate coordinates.
std::vector<DegeneratePoint> degenerate_points(const std::vector<PeriodCell>& cells);

}  // namespace salem

#endif

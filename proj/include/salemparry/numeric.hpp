#ifndef SALEMPARRY_NUMERIC_HPP
#define SALEMPARRY_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace salem {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its mathematical domain
/// (non-monic input to a monic-only routine, zero polynomial, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised on malformed textual input (polynomial literals, rationals).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

/// Parses "p", "p/q", or a decimal literal such as "-0.25" / "5e-4" exactly.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Rational make_rational(long num, long den = 1);

/// Largest dyadic approximation helpers used by interval code.
double to_double_down(const Rational& q);
double to_double_up(const Rational& q);

std::size_t hash_value(const Integer& z);

}  // namespace salem

#endif

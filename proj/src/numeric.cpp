#include "salemparry/numeric.hpp"

#include <cctype>
#include <cmath>

namespace salem {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::size_t offset) {
  std::size_t start = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
  if (!all_digits(s.substr(start))) throw ParseError("expected an integer", offset);
  Integer z(std::string(s.substr(start)), 10);
  return s[0] == '-' ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty number", b);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), b);
    Integer den = parse_integer(s.substr(slash + 1), b + slash + 1);
    if (den == 0) throw ParseError("zero denominator", b + slash + 1);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional fraction and exponent.
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac_len = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw ParseError("expected a number", b + i);
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw ParseError("unexpected character", b + i);
    Integer ex = parse_integer(s.substr(i + 1), b + i + 1);
    if (!ex.fits_slong_p() || abs(ex) > 10000) throw ParseError("exponent out of range", b + i + 1);
    exponent = ex.get_si();
  }
  Integer mant(digits, 10);
  long shift = exponent - frac_len;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  Rational q = shift >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double to_double_down(const Rational& q) {
  double d = q.get_d();  // truncates toward zero, within one ulp
  while (Rational(d) > q) d = std::nextafter(d, -INFINITY);
  return d;
}

double to_double_up(const Rational& q) {
  double d = q.get_d();
  while (Rational(d) < q) d = std::nextafter(d, INFINITY);
  return d;
}

std::size_t hash_value(const Integer& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
  h = h * 1000003u + static_cast<std::size_t>(sgn(z) + 1);
  if (mpz_size(z.get_mpz_t()) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace salem

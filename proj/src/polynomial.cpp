#include "salemparry/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace salem {

IntPolynomial int_poly(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  Integer g = content(p);
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    c.push_back(std::move(q));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    c.push_back(q * v.get_num());
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial remainder(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (!monic.is_monic()) throw DomainError("divisor must be monic");
  if (a.degree() < monic.degree()) return {IntPolynomial{}, a};
  std::vector<Integer> r = a.coeffs();
  const int db = monic.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer f = r[static_cast<std::size_t>(i)];
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * monic.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial remainder_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  return divmod_monic(a, monic).second;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = remainder(x, y);
    // Keep intermediate coefficients small.
    x = std::move(y);
    y = r.is_zero() ? r : to_rational(primitive_part(r));
  }
  if (x.is_zero()) return x;
  return x * Rational(1 / x.leading());
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPolynomial g = gcd(to_rational(a), to_rational(b));
  return primitive_part(g);
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() == 0) return int_poly({1});
  RatPolynomial rp = to_rational(p);
  RatPolynomial g = gcd(rp, rp.derivative());
  IntPolynomial s = primitive_part(divmod(rp, g).first);
  if (s.leading() < 0) s = -s;
  return s;
}

int sign_at(const IntPolynomial& p, const Rational& r) {
  if (p.is_zero()) return 0;
  // den^deg * p(num/den) evaluated in integers; den > 0.
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * num + p.coeffs()[static_cast<std::size_t>(i)] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

Rational eval(const IntPolynomial& p, const Rational& r) { return p.eval(r); }
Rational eval(const RatPolynomial& p, const Rational& r) { return p.eval(r); }

bool is_self_reciprocal(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

namespace {

template <class T>
Polynomial<T> trace_impl(const Polynomial<T>& p) {
  if (p.is_zero() || p.degree() % 2 != 0) throw DomainError("trace polynomial needs even degree");
  const auto& c = p.coeffs();
  if (!std::equal(c.begin(), c.end(), c.rbegin())) throw DomainError("trace polynomial needs a self-reciprocal polynomial");
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  // x^j + x^-j = D_j(y):  D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}.
  Polynomial<T> prev = Polynomial<T>::constant(T(2));
  Polynomial<T> cur = Polynomial<T>::x();
  Polynomial<T> g = Polynomial<T>::constant(c[d]);
  for (std::size_t j = 1; j <= d; ++j) {
    g += cur * c[d + j];
    Polynomial<T> next = Polynomial<T>::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return g;
}

}  // namespace

IntPolynomial trace_polynomial(const IntPolynomial& p) { return trace_impl(p); }
RatPolynomial trace_polynomial(const RatPolynomial& p) { return trace_impl(p); }

IntPolynomial from_trace_polynomial(const IntPolynomial& g) {
  if (g.is_zero()) return {};
  const int d = g.degree();
  // (x^2 + 1)^k x^(d-k) for each y^k.
  IntPolynomial result;
  IntPolynomial pow = int_poly({1});
  const IntPolynomial x2p1 = int_poly({1, 0, 1});
  for (int k = 0; k <= d; ++k) {
    result += (pow * g.coeffs()[static_cast<std::size_t>(k)]).shifted(static_cast<std::size_t>(d - k));
    pow = pow * x2p1;
  }
  return result;
}

IntPolynomial cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic index must be positive");
  IntPolynomial p = IntPolynomial::monomial(Integer(1), n) - int_poly({1});
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divmod_monic(p, cyclotomic(d)).first;
  return p;
}

IntPolynomial parse_int_polynomial(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  std::vector<Integer> coeffs;
  skip();
  if (i < text.size() && text[i] == ']') {
    throw ParseError("empty coefficient list", i);
  }
  while (true) {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("expected an integer coefficient", start);
    std::string tok(text.substr(start, i - start));
    if (tok[0] == '+') tok.erase(0, 1);
    coeffs.emplace_back(tok, 10);
    skip();
    if (i >= text.size()) throw ParseError("unterminated list", i);
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or ']'", i);
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i);
  return IntPolynomial(std::move(coeffs));
}

std::string to_json_list(const IntPolynomial& p) {
  std::ostringstream os;
  os << '[';
  if (p.is_zero()) os << '0';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.coeffs()[i].get_str();
  os << ']';
  return os.str();
}

std::string to_pretty(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace salem

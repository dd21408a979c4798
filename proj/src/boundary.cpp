#include "salemparry/boundary.hpp"

#include <algorithm>
#include <sstream>

namespace salem {

namespace {

template <std::size_t N>
void normalize(std::array<Integer, N>& k, const std::array<std::size_t, N>& priority) {
  Integer g = 0;
  for (const auto& v : k) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) throw DomainError("zero curve");
  for (auto& v : k) v /= g;
  for (std::size_t i : priority) {
    if (k[i] == 0) continue;
    if (k[i] < 0)
      for (auto& v : k) v = -v;
    break;
  }
}

std::array<Integer, 4> normalize_curve(std::array<Integer, 4> k) {
  normalize(k, std::array<std::size_t, 4>{3, 2, 1, 0});
  return k;
}

std::string linear_text(const Integer& c0, const Integer& c1, const char* var) {
  std::ostringstream os;
  if (c1 == 0) return c0.get_str();
  if (c0 != 0) os << c0.get_str() << (c1 > 0 ? "+" : "-");
  else if (c1 < 0) os << '-';
  Integer m = abs(c1);
  if (m != 1) os << m.get_str();
  os << var;
  return os.str();
}

// Constraint matching an edge: the cell side is form >= 0 (or > 0).
struct EdgeSupport {
  bool domain = false;
  LinearForm form;
  bool strict = false;
  bool found = false;
};

EdgeSupport support_of(const PeriodCell& cell, const CPoint& a, const CPoint& b) {
  EdgeSupport s;
  for (const auto& h : domain_halfplanes())
    if (sgn(h.form.eval(a.c1, a.c2)) == 0 && sgn(h.form.eval(b.c1, b.c2)) == 0) {
      s.domain = true;
      return s;
    }
  for (const auto& h : cell.constraints) {
    if (sgn(h.form.eval(a.c1, a.c2)) != 0 || sgn(h.form.eval(b.c1, b.c2)) != 0) continue;
    if (!s.found) s.form = h.form;
    s.found = true;
    s.strict = s.strict || h.strict;
  }
  return s;
}

QuadraticIrrational x_of_vertex(const CPoint& p) {
  Rational half(1, 2);
  return QuadraticIrrational(p.c1 * half, half, p.c1 * p.c1 - 4 * p.c2 + 8);
}

Rational rational_near(double v) { return Rational(v); }

}  // namespace

std::array<Integer, 4> curve_from_fraction(const Rational& n0, const Rational& n1, const Rational& d0,
                                           const Rational& d1) {
  // y (d0 + d1 x) - n0 - n1 x = 0, scaled to integers.
  std::array<Rational, 4> r{-n0, -n1, d0, d1};
  Integer l = 1;
  for (const auto& v : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::array<Integer, 4> k;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational s = r[i] * l;
    k[i] = s.get_num();
  }
  return normalize_curve(k);
}

std::string AlphaPiece::curve_text() const {
  // y = -(k0 + kx x) / (ky + kxy x)
  const auto& [k0, kx, ky, kxy] = curve;
  if (kxy == 0 && k0 % ky == 0 && kx % ky == 0) return "y = " + linear_text(-k0 / ky, -kx / ky, "x");
  Integer n0 = -k0, n1 = -kx, d0 = ky, d1 = kxy;
  std::string sign;
  if (sgn(n0) <= 0 && sgn(n1) <= 0) {
    sign = "-";
    n0 = -n0;
    n1 = -n1;
  }
  auto wrap = [](const Integer& c0, const Integer& c1, bool denominator) {
    std::string t = linear_text(c0, c1, "x");
    bool compound = (c0 != 0 && c1 != 0) || (denominator && c0 == 0 && c1 != 1);
    return compound ? "(" + t + ")" : t;
  };
  return "y = " + sign + wrap(n0, n1, false) + "/" + wrap(d0, d1, true);
}

std::string AlphaPiece::to_string() const {
  std::string rel = lower ? (strict ? ">" : ">=") : (strict ? "<" : "<=");
  std::string text = curve_text();
  return "y " + rel + text.substr(3) + " for x in [" + x_lo.to_string() + ", " + x_hi.to_string() + "]";
}

bool same_piece(const AlphaPiece& a, const AlphaPiece& b) {
  return a.curve == b.curve && a.lower == b.lower && a.strict == b.strict && a.x_lo == b.x_lo && a.x_hi == b.x_hi;
}

std::vector<AlphaPiece> alpha_boundary(const PeriodCell& cell) {
  std::vector<AlphaPiece> out;
  const auto& poly = cell.polygon;
  const std::size_t n = poly.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const CPoint& a = poly[i];
    const CPoint& b = poly[(i + 1) % n];
    if (n == 2 && i == 1) break;
    EdgeSupport sup = support_of(cell, a, b);
    if (sup.domain || !sup.found) continue;

    // phi(t) = c1(t)^2/4 + 2 - c2(t) along a + t (b - a).
    Rational d1 = b.c1 - a.c1, d2 = b.c2 - a.c2;
    Rational qa = d1 * d1 / 4, qb = a.c1 * d1 / 2 - d2, qc = a.c1 * a.c1 / 4 + 2 - a.c2;
    auto phi = [&](const Rational& t) -> Rational { return (qa * t + qb) * t + qc; };

    struct Break {
      QuadraticIrrational t;
      QuadraticIrrational x;
    };
    std::vector<Break> breaks;
    breaks.push_back({QuadraticIrrational(Rational(0)), x_of_vertex(a)});
    std::vector<QuadraticIrrational> roots;
    if (sgn(qa) == 0) {
      if (sgn(qb) != 0) roots.emplace_back(-qc / qb);
    } else {
      Rational disc = qb * qb - 4 * qa * qc;
      if (sgn(disc) > 0) {
        roots.emplace_back(-qb / (2 * qa), Rational(-1) / (2 * qa), disc);
        roots.emplace_back(-qb / (2 * qa), Rational(1) / (2 * qa), disc);
      }
    }
    std::sort(roots.begin(), roots.end());
    for (const auto& t : roots)
      if (t.sign() > 0 && compare(t, QuadraticIrrational(Rational(1))) < 0)
        breaks.push_back({t, t * (d1 / 2) + a.c1 / 2});
    breaks.push_back({QuadraticIrrational(Rational(1)), x_of_vertex(b)});

    const Integer e0 = sup.form.a0 + 2 * sup.form.a2;
    const Integer& f1 = sup.form.a1;
    const Integer& f2 = sup.form.a2;
    const bool degenerate = f2 != 0 && e0 * f2 == f1 * f1;

    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
      Rational tm = rational_near((breaks[j].t.approx() + breaks[j + 1].t.approx()) / 2);
      if (sgn(tm) <= 0 || tm >= 1 || sgn(phi(tm)) <= 0) continue;
      CPoint m{a.c1 + tm * d1, a.c2 + tm * d2};
      QuadraticIrrational xm = x_of_vertex(m);
      int side = (xm * Rational(f2) + Rational(f1)).sign();
      QuadraticIrrational x0 = breaks[j].x, x1 = breaks[j + 1].x;
      if (side == 0 || x0 == x1) continue;
      AlphaPiece piece;
      piece.curve = degenerate ? normalize_curve({f1, Integer(0), f2, Integer(0)}) : normalize_curve({e0, f1, f1, f2});
      piece.lower = side > 0;
      piece.strict = sup.strict;
      if (x1 < x0) std::swap(x0, x1);
      piece.x_lo = x0;
      piece.x_hi = x1;
      out.push_back(std::move(piece));
    }
  }
  std::sort(out.begin(), out.end(), [](const AlphaPiece& p, const AlphaPiece& q) {
    if (p.curve != q.curve) return p.curve < q.curve;
    if (p.lower != q.lower) return p.lower;
    return p.x_lo < q.x_lo;
  });
  std::vector<AlphaPiece> merged;
  for (auto& p : out) {
    if (!merged.empty()) {
      AlphaPiece& last = merged.back();
      if (last.curve == p.curve && last.lower == p.lower && last.strict == p.strict && last.x_hi == p.x_lo) {
        last.x_hi = p.x_hi;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  return merged;
}

std::string CEdge::to_string() const {
  // c1 = -(k0 + k2 c2) / k1
  std::string rel = lower ? (strict ? ">" : ">=") : (strict ? "<" : "<=");
  std::string rhs = linear_text(-line[0], -line[2], "c2");
  if (line[1] != 1) rhs = "(" + rhs + ")/" + line[1].get_str();
  return "c1 " + rel + " " + rhs + " for c2 in [" + salem::to_string(c2_lo) + ", " + salem::to_string(c2_hi) + "]";
}

std::vector<CEdge> c_boundary(const PeriodCell& cell) {
  std::vector<CEdge> out;
  const auto& poly = cell.polygon;
  const std::size_t n = poly.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (n == 2 && i == 1) break;
    const CPoint& a = poly[i];
    const CPoint& b = poly[(i + 1) % n];
    EdgeSupport sup = support_of(cell, a, b);
    if (sup.domain || !sup.found || sup.form.a1 == 0) continue;
    CEdge e;
    e.line = {sup.form.a0, sup.form.a1, sup.form.a2};
    e.lower = sup.form.a1 > 0;
    normalize(e.line, std::array<std::size_t, 3>{1, 2, 0});
    e.strict = sup.strict;
    e.c2_lo = std::min(a.c2, b.c2);
    e.c2_hi = std::max(a.c2, b.c2);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CEdge& p, const CEdge& q) {
    if (p.line != q.line) return p.line < q.line;
    return p.c2_lo < q.c2_lo;
  });
  return out;
}

}  // namespace salem

#include "salemparry/cells.hpp"

#include <algorithm>
#include <sstream>

namespace salem {

Scalar LinearForm::eval(const Scalar& c1, const Scalar& c2) const {
  return Scalar(a0) + c1 * Scalar(a1) + c2 * Scalar(a2);
}

std::string to_string(const LinearForm& f) {
  std::ostringstream os;
  os << f.a0.get_str();
  auto term = [&](const Integer& a, const char* var) {
    if (a == 0) return;
    os << (a < 0 ? " - " : " + ");
    Integer m = abs(a);
    if (m != 1) os << m.get_str() << '*';
    os << var;
  };
  term(f.a1, "c1");
  term(f.a2, "c2");
  return os.str();
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::cell: return "cell";
    case CellStatus::degenerate: return "degenerate";
    default: return "empty";
  }
}

std::vector<LinearForm> symbolic_g(const IntPolynomial& r) {
  if (r.is_zero() || r[0] != 1) throw DomainError("R must satisfy R(0) = 1");
  if (r.leading() != 1) throw DomainError("R must be monic so that the top coefficient is 1");
  const LinearForm quartic[5] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const std::size_t n = static_cast<std::size_t>(r.degree());
  std::vector<LinearForm> g(n + 5, LinearForm{0, 0, 0});
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer& rk = r.coeffs()[k];
    if (rk == 0) continue;
    for (std::size_t j = 0; j < 5; ++j) {
      g[k + j].a0 += rk * quartic[j].a0;
      g[k + j].a1 += rk * quartic[j].a1;
      g[k + j].a2 += rk * quartic[j].a2;
    }
  }
  return g;
}

namespace {

Rational value(const LinearForm& f, const CPoint& p) { return f.eval(p.c1, p.c2); }

}  // namespace

std::vector<CPoint> clip_polygon(const std::vector<HalfPlane>& halfplanes) {
  std::vector<CPoint> poly{{Rational(0), Rational(-2)}, {Rational(4), Rational(6)}, {Rational(-4), Rational(6)}};
  for (const auto& h : halfplanes) {
    if (poly.empty()) break;
    std::vector<CPoint> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const CPoint& p = poly[i];
      const CPoint& q = poly[(i + 1) % n];
      Rational fp = value(h.form, p), fq = value(h.form, q);
      if (sgn(fp) >= 0) out.push_back(p);
      if ((sgn(fp) > 0 && sgn(fq) < 0) || (sgn(fp) < 0 && sgn(fq) > 0)) {
        Rational t = fp / (fp - fq);
        out.push_back({p.c1 + (q.c1 - p.c1) * t, p.c2 + (q.c2 - p.c2) * t});
      }
    }
    std::vector<CPoint> dedup;
    for (auto& v : out)
      if (dedup.empty() || !(dedup.back() == v)) dedup.push_back(v);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    poly = std::move(dedup);
  }
  return poly;
}

Rational polygon_area(const std::vector<CPoint>& poly) {
  Rational twice = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const CPoint& p = poly[i];
    const CPoint& q = poly[(i + 1) % n];
    twice += p.c1 * q.c2 - q.c1 * p.c2;
  }
  return abs(twice) / 2;
}

std::vector<HalfPlane> domain_halfplanes() {
  // c2 - 2c1 + 2 > 0 and c2 + 2c1 + 2 > 0; the parabola side is handled apart.
  return {{{2, -2, 1}, true}, {{2, 2, 1}, true}};
}

bool below_parabola(const CPoint& p) { return p.c2 - p.c1 * p.c1 / 4 < 2; }

namespace {

bool satisfies(const std::vector<HalfPlane>& hs, const CPoint& p) {
  for (const auto& h : hs) {
    int s = sgn(value(h.form, p));
    if (h.strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

bool satisfies_strictly(const std::vector<HalfPlane>& hs, const CPoint& p) {
  for (const auto& h : hs)
    if (sgn(value(h.form, p)) <= 0) return false;
  return true;
}

}  // namespace

std::optional<CPoint> interior_point(const std::vector<HalfPlane>& halfplanes) {
  for (const auto& h : halfplanes)
    if (h.form.is_constant() && sgn(h.form.a0) <= 0) return std::nullopt;
  std::vector<HalfPlane> all = halfplanes;
  for (auto& d : domain_halfplanes()) all.push_back(d);
  std::vector<CPoint> poly = clip_polygon(all);
  if (poly.size() < 3 || sgn(polygon_area(poly)) == 0) return std::nullopt;
  // The region above the parabola is convex, so the polygon meets the open
  // side below it iff some vertex lies strictly below.
  const CPoint* best = nullptr;
  Rational best_val;
  for (const auto& v : poly) {
    Rational val = v.c2 - v.c1 * v.c1 / 4;
    if (!best || val < best_val) {
      best = &v;
      best_val = val;
    }
  }
  if (best_val >= 2) return std::nullopt;
  CPoint centre{0, 0};
  for (const auto& v : poly) {
    centre.c1 += v.c1;
    centre.c2 += v.c2;
  }
  centre.c1 /= static_cast<long>(poly.size());
  centre.c2 /= static_cast<long>(poly.size());
  Rational t(1, 2);
  for (int i = 0; i < 200; ++i, t /= 2) {
    CPoint w{best->c1 + (centre.c1 - best->c1) * t, best->c2 + (centre.c2 - best->c2) * t};
    if (below_parabola(w) && satisfies_strictly(all, w)) return w;
  }
  throw std::logic_error("interior point search did not converge");
}

std::vector<LinearForm> PeriodCell::varying_forms() const {
  std::vector<LinearForm> out;
  for (std::size_t i = 1; i + 1 < forms.size(); ++i)
    if (!forms[i].is_constant()) out.push_back(forms[i]);
  return out;
}

namespace {

bool in_domain(const CPoint& p) { return satisfies(domain_halfplanes(), p) && below_parabola(p); }

// True when no point of the cell lies in the convex hull of `face`
// (vertices of the closure): some strict constraint vanishes on all of it,
// or it is a single point off the open parabola side.
bool face_excluded(const PeriodCell& cell, const std::vector<CPoint>& face) {
  if (face.empty()) return true;
  if (face.size() == 1 && !below_parabola(face[0])) return true;
  std::vector<HalfPlane> strict = domain_halfplanes();
  for (const auto& h : cell.constraints)
    if (h.strict) strict.push_back(h);
  for (const auto& h : strict) {
    bool vanishes = true;
    for (const auto& v : face) vanishes = vanishes && sgn(value(h.form, v)) == 0;
    if (vanishes) return true;
  }
  return false;
}

// Per cell point: h > 0, or h = 0 and gap > 0. h and gap are linear, so it
// suffices to look at the closure's vertices and the faces where they vanish.
bool side_condition_holds(const PeriodCell& cell, const OneIndexCheck& chk) {
  if (cell.polygon.empty()) return false;
  std::vector<CPoint> h_face;
  for (const auto& v : cell.polygon) {
    int sh = sgn(value(chk.sum_excess, v));
    if (sh < 0) return false;
    if (sh == 0) h_face.push_back(v);
  }
  if (face_excluded(cell, h_face)) return true;
  std::vector<CPoint> gap_face;
  for (const auto& v : h_face) {
    int sg = sgn(value(chk.gap, v));
    if (sg < 0) return false;
    if (sg == 0) gap_face.push_back(v);
  }
  return face_excluded(cell, gap_face);
}

void check_one_indices(PeriodCell& cell) {
  const auto& g = cell.forms;
  for (std::size_t i : cell.one_indices) {
    OneIndexCheck chk;
    chk.index = i;
    chk.sum_excess = g[i - 1] + g[i + 1] - g[1];
    chk.gap = g[1] - g[i + 1];
    chk.holds = side_condition_holds(cell, chk);
    if (!chk.holds) cell.side_conditions_hold = false;
    cell.one_checks.push_back(std::move(chk));
  }
}

}  // namespace

PeriodCell derive_cell(const IntPolynomial& r, const std::string& name) {
  PeriodCell cell;
  cell.name = name;
  cell.r = r;
  cell.forms = symbolic_g(r);
  bool constant_violation = false;
  for (std::size_t i = 1; i + 1 < cell.forms.size(); ++i) {
    const LinearForm& f = cell.forms[i];
    if (f.is_constant()) {
      if (f.a0 == 1) cell.one_indices.push_back(i);
      else constant_violation = true;
      continue;
    }
    cell.constraints.push_back({f, true});
    cell.constraints.push_back({LinearForm{1, 0, 0} - f, false});
  }
  if (constant_violation) {
    cell.status = CellStatus::empty;
    return cell;
  }
  std::vector<HalfPlane> all = cell.constraints;
  for (auto& d : domain_halfplanes()) all.push_back(d);
  cell.polygon = clip_polygon(all);
  if (interior_point(cell.constraints)) {
    cell.status = CellStatus::cell;
  } else {
    cell.status = CellStatus::empty;
    // A closure without interior can still carry points of the mixed
    // strict / non-strict system.
    std::vector<CPoint> probes = cell.polygon;
    if (cell.polygon.size() == 2)
      probes.push_back({(cell.polygon[0].c1 + cell.polygon[1].c1) / 2, (cell.polygon[0].c2 + cell.polygon[1].c2) / 2});
    for (const auto& p : probes)
      if (satisfies(all, p) && in_domain(p)) cell.status = CellStatus::degenerate;
  }
  if (cell.status == CellStatus::empty) cell.polygon.clear();
  check_one_indices(cell);
  return cell;
}

bool in_cell(const PeriodCell& cell, const Rational& c1, const Rational& c2) {
  if (cell.status == CellStatus::empty) return false;
  CPoint p{c1, c2};
  return in_domain(p) && satisfies(cell.constraints, p);
}

bool in_cell(const PeriodCell& cell, const Scalar& c1, const Scalar& c2) {
  if (c1.is_rational() && c2.is_rational()) return in_cell(cell, c1.rational(), c2.rational());
  if (cell.status == CellStatus::empty) return false;
  for (const auto& h : cell.constraints) {
    int s = h.form.eval(c1, c2).sign();
    if (h.strict ? s <= 0 : s < 0) return false;
  }
  for (const auto& h : domain_halfplanes())
    if (h.form.eval(c1, c2).sign() <= 0) return false;
  return (c2 - c1 * c1 * Scalar(Rational(1, 4)) - Scalar(2)).sign() < 0;
}

std::optional<std::size_t> locate_point(const RotationParams& params, const std::vector<PeriodCell>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (in_cell(cells[i], params.c1, params.c2)) return i;
  return std::nullopt;
}

std::optional<std::size_t> locate_point(const Rational& alpha1, const Rational& alpha2,
                                        const std::vector<PeriodCell>& cells) {
  return locate_point(RotationParams::from_alphas(Scalar(alpha1), Scalar(alpha2)), cells);
}

DisjointnessResult cells_disjoint(const PeriodCell& a, const PeriodCell& b) {
  DisjointnessResult res;
  if (a.status != CellStatus::cell || b.status != CellStatus::cell) return res;
  std::vector<HalfPlane> both = a.constraints;
  both.insert(both.end(), b.constraints.begin(), b.constraints.end());
  res.witness = interior_point(both);
  res.disjoint = !res.witness.has_value();
  return res;
}

UVChoice choose_uv(const PeriodCell& cell, const Scalar& c1, const Scalar& c2) {
  if (!in_cell(cell, c1, c2)) throw DomainError("point is outside the cell " + cell.name);
  const auto& g = cell.forms;
  const std::size_t top = g.size() - 1;
  std::vector<Scalar> val(g.size());
  for (std::size_t i = 0; i <= top; ++i) val[i] = g[i].eval(c1, c2);
  // Indices whose value is exactly 1 need the side conditions.
  std::vector<std::size_t> tight;
  std::vector<Scalar> u_terms, v_terms;
  for (std::size_t i = 1; i < top; ++i) {
    u_terms.push_back(val[i]);
    if ((val[i] - Scalar(1)).sign() != 0) {
      v_terms.push_back(val[i]);
      continue;
    }
    int h = (val[i - 1] + val[i + 1] - val[1]).sign();
    if (h > 0) continue;
    Scalar gap = val[1] - val[i + 1];
    if (h < 0 || gap.sign() <= 0)
      throw DomainError("side condition fails at index " + std::to_string(i) + " of cell " + cell.name);
    u_terms.push_back(gap);
  }
  Rational width(1, 1 << 30);
  while (true) {
    Rational u_lo, v_hi;
    bool first = true;
    for (const auto& s : u_terms) {
      Rational lo = s.enclose(width).lo;
      if (first || lo < u_lo) u_lo = lo;
      first = false;
    }
    u_lo /= 2;
    if (v_terms.empty()) {
      // No constraint from above: any v in (u, 1) works.
      v_hi = (1 + u_lo) / 2;
    } else {
      first = true;
      for (const auto& s : v_terms) {
        Rational hi = s.enclose(width).hi;
        if (first || hi > v_hi) v_hi = hi;
        first = false;
      }
      v_hi = (1 + v_hi) / 2;
    }
    if (sgn(u_lo) > 0 && v_hi < 1 && u_lo < v_hi) {
      Rational t1 = 2 / u_lo, t2 = 1 / (1 - v_hi);
      return {u_lo, v_hi, std::max(t1, t2)};
    }
    width /= Rational(1 << 30);
  }
}

ExpansionPrediction predicted_word(const IntPolynomial& p, const IntPolynomial& r) {
  IntPolynomial f = r * p;
  if (!f.is_monic() || f[0] != 1 || f.degree() < 4)
    throw DomainError("R*P must be monic of degree >= 4 with constant term 1");
  ExpansionPrediction pred;
  const std::size_t top = static_cast<std::size_t>(f.degree()) - 1;
  for (std::size_t i = 1; i <= top; ++i) pred.c.push_back(-f[i]);
  pred.word.prefix = {pred.c[0]};
  pred.word.period.assign(pred.c.begin() + 1, pred.c.end() - 1);
  pred.word.period.push_back(pred.c[0] - 1);
  pred.word.period.push_back(pred.c[0] - 1);
  return pred;
}

ExpansionPrediction predict_expansion(const SalemData& s, const PeriodCell& cell) {
  auto [c1, c2] = sextic_rotation_coordinates(s);
  UVChoice uv = choose_uv(cell, c1, c2);
  if (compare(s.beta, uv.threshold) <= 0)
    throw DomainError("beta is below the threshold " + to_string(uv.threshold) + " of cell " + cell.name);
  ExpansionPrediction pred = predicted_word(s.minpoly, cell.r);
  pred.uv = uv;
  return pred;
}

}  // namespace salem

#include "salemparry/verify.hpp"

#include <mpfr.h>

#include <random>
#include <sstream>

#include "salemparry/matrix.hpp"
#include "salemparry/sturm.hpp"

namespace salem {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string join(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ']';
  return os.str();
}

std::string word_text(const PeriodicWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.prefix.size(); ++i) os << (i ? "," : "") << w.prefix[i].get_str();
  os << '(';
  for (std::size_t i = 0; i < w.period.size(); ++i) os << (i ? "," : "") << w.period[i].get_str();
  os << ")^inf";
  return os.str();
}

// Rational enclosure of 2cos(k pi / n).
RationalInterval two_cos_enclosure(long k, long n) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_si(t, t, k, MPFR_RNDN);
  mpfr_div_si(t, t, n, MPFR_RNDN);
  mpfr_cos(t, t, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2, MPFR_RNDN);
  Rational v;
  mpfr_get_q(v.get_mpq_t(), t);
  mpfr_clear(t);
  Rational pad(Integer(1), Integer(1) << 200);
  return {v - pad, v + pad};
}

}  // namespace

int unimodular_trace_roots(const RatPolynomial& p) {
  IntPolynomial g = primitive_part(trace_polynomial(p));
  if (g.degree() < 1) return 0;
  SturmSequence s(g);
  int n = s.count(Rational(-2), Rational(2));
  if (sign_at(g, Rational(2)) == 0) --n;
  return n;
}

VerificationReport verify_unit_circle_instance(const std::vector<Rational>& d) {
  VerificationReport r;
  r.name = "circle";
  r.input = "d=" + join(d);
  const std::size_t len = d.size();
  if (len < 3 || len % 2 == 0) {
    r.details["reason"] = "coefficient list must have odd length 2n-1 >= 3";
    return r;
  }
  const int n = static_cast<int>(len + 1) / 2;
  Rational bound(1, 2 * n - 2);
  for (std::size_t i = 0; i < len; ++i) {
    if (d[i] != d[len - 1 - i]) {
      r.details["reason"] = "coefficients not symmetric";
      return r;
    }
    if (!(abs(d[i]) < bound)) {
      r.details["reason"] = "hypothesis |d_i| < 1/(2n-2) not met";
      return r;
    }
  }
  std::vector<Rational> c;
  c.push_back(1);
  c.insert(c.end(), d.begin(), d.end());
  c.push_back(1);
  int roots = unimodular_trace_roots(RatPolynomial(std::move(c)));
  r.details["trace_roots_in_open_interval"] = std::to_string(roots);
  r.status = roots == n ? CheckStatus::pass : CheckStatus::fail;
  if (r.status == CheckStatus::fail) r.failures.push_back(r.input);
  return r;
}

VerificationReport verify_unit_circle(int n, int trials, std::uint64_t seed) {
  if (n < 2) throw DomainError("circle check needs n >= 2");
  VerificationReport r;
  r.name = "circle";
  r.input = "n=" + std::to_string(n) + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  const long scale = 1000;
  std::uniform_int_distribution<long> pick(-(scale - 1), scale - 1);
  int passed = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> d(static_cast<std::size_t>(2 * n - 1));
    for (int i = 0; i < n; ++i) {
      Rational v(pick(rng), scale * (2 * n - 2));
      v.canonicalize();
      d[static_cast<std::size_t>(i)] = v;
      d[static_cast<std::size_t>(2 * n - 2 - i)] = v;
    }
    VerificationReport one = verify_unit_circle_instance(d);
    if (one.status == CheckStatus::pass) ++passed;
    else r.failures.push_back(one.input);
  }
  r.details["trials"] = std::to_string(trials);
  r.details["passed"] = std::to_string(passed);
  r.status = r.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

VerificationReport verify_interlacing(int n) {
  if (n < 2) throw DomainError("interlacing check needs n >= 2");
  VerificationReport r;
  r.name = "interlacing";
  r.input = "n=" + std::to_string(n);
  std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1), Integer(1));
  c.front() = 4 * (n - 1);
  c.back() = 4 * (n - 1);
  IntPolynomial g = primitive_part(trace_polynomial(IntPolynomial(std::move(c))));
  SturmSequence s(g);
  std::vector<RationalInterval> ends;
  for (long k = 0; k <= n; ++k) ends.push_back(two_cos_enclosure(k, n));
  std::ostringstream counts;
  bool ok = true;
  for (long k = 0; k <= n; ++k) {
    // No root inside an endpoint enclosure.
    const auto& e = ends[static_cast<std::size_t>(k)];
    if (sign_at(g, e.lo) == 0 || s.count(e.lo, e.hi) != 0) {
      ok = false;
      r.failures.push_back("root at 2cos(" + std::to_string(k) + "pi/" + std::to_string(n) + ")");
    }
  }
  for (long k = 1; k <= n; ++k) {
    int cnt = s.count(ends[static_cast<std::size_t>(k)].hi, ends[static_cast<std::size_t>(k - 1)].lo);
    counts << (k > 1 ? "," : "") << cnt;
    if (cnt != 1) {
      ok = false;
      r.failures.push_back("interval k=" + std::to_string(k) + " holds " + std::to_string(cnt) + " roots");
    }
  }
  r.details["roots_per_interval"] = counts.str();
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

VerificationReport verify_power_words(const IntPolynomial& p, const std::vector<PeriodCell>& cells, const PowerCheckOptions& opts) {
  VerificationReport r;
  r.name = "powers";
  r.input = "poly=" + to_json_list(p) + " m=" + std::to_string(opts.m_lo) + ".." + std::to_string(opts.m_hi);
  SalemData base = salem_data(p);
  if (p.degree() != 6) throw DomainError("power-word check needs a sextic");
  std::size_t total = 0, located = 0, eligible = 0, matched = 0, below = 0, below_matched = 0;
  for (unsigned long m = opts.m_lo; m <= opts.m_hi; ++m) {
    ++total;
    IntPolynomial pm = m == 1 ? p : power_polynomial(p, m);
    SalemData s = salem_data(pm);
    auto [c1, c2] = sextic_rotation_coordinates(s);
    auto idx = locate_point(RotationParams{c1, c2}, cells);
    if (!idx) continue;
    ++located;
    const PeriodCell& cell = cells[*idx];
    ExpansionPrediction pred;
    bool eligible_m = true;
    try {
      pred = predict_expansion(s, cell);
    } catch (const DomainError&) {
      eligible_m = false;
      pred = predicted_word(pm, cell.r);
    }
    ExpansionRecord rec = expand_one(pm, opts.cap);
    bool same = rec.status == ExpansionStatus::periodic && rec.word().canonical() == pred.word.canonical();
    if (eligible_m) {
      ++eligible;
      if (same) ++matched;
      else r.failures.push_back("m=" + std::to_string(m) + " cell=" + cell.name);
    } else {
      ++below;
      if (same) ++below_matched;
    }
  }
  r.details["m_count"] = std::to_string(total);
  r.details["located"] = std::to_string(located);
  r.details["eligible"] = std::to_string(eligible);
  r.details["matched"] = std::to_string(matched);
  r.details["below_threshold"] = std::to_string(below);
  r.details["below_threshold_matched"] = std::to_string(below_matched);
  std::ostringstream frac;
  frac << (total ? static_cast<double>(located) / static_cast<double>(total) : 0.0);
  r.details["located_fraction"] = frac.str();
  r.status = r.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

std::optional<PeriodicWord> closed_form_word(const Integer& a, const Integer& b, const Integer& c) {
  PeriodicWord w;
  if (2 <= -b && -b < c - a + 2) {
    w.prefix = {a - 1};
    w.period = {a + b + 1, c - a + b + 1, c - a - 1, 2 * a - c - 1, 2 * a - c - 1,
                c - a - 1, c - a + b + 1, a + b + 1, a - 2, a - 2};
    return w;
  }
  if (a - c + 2 < -b && -b <= 1) {
    w.prefix = {a};
    w.period = {b + 1, c - a - 1, a - 1, 2 * a + b - c + 1, c - a - 1, c - a - 1,
                2 * a + b - c + 1, a - 1, c - a - 1, b + 1, a - 1, a - 1};
    return w;
  }
  return std::nullopt;
}

VerificationReport verify_closed_form(const Integer& a, const Integer& b, const Integer& c, std::size_t cap) {
  VerificationReport r;
  r.name = "closed-form";
  r.input = "a=" + a.get_str() + " b=" + b.get_str() + " c=" + c.get_str();
  IntPolynomial p = make_sextic(a, b, c);
  WellPosedReport wp = well_posed_sextic(p);
  auto word = closed_form_word(a, b, c);
  if (!wp.well_posed || !word) {
    r.details["reason"] = wp.well_posed ? "no case applies" : "not well-posed";
    return r;
  }
  ExpansionRecord rec = expand_one(p, cap);
  r.details["expected"] = word_text(*word);
  if (rec.status != ExpansionStatus::periodic) {
    r.status = CheckStatus::fail;
    r.details["computed"] = "cap exceeded";
    r.failures.push_back(r.input);
    return r;
  }
  PeriodicWord got = rec.word().canonical();
  r.details["computed"] = word_text(got);
  r.details["m"] = std::to_string(got.preperiod());
  r.details["p"] = std::to_string(got.period_length());
  r.status = got == word->canonical() ? CheckStatus::pass : CheckStatus::fail;
  if (r.status == CheckStatus::fail) r.failures.push_back(r.input);
  return r;
}

VerificationReport verify_closed_form_scan(long a_max, std::size_t cap) {
  VerificationReport r;
  r.name = "closed-form";
  r.input = "a<=" + std::to_string(a_max);
  std::size_t checked = 0, case1 = 0, case2 = 0;
  // Well-posedness forces a < c < 2a and |b + 2| < c - a.
  for (long a = 1; a <= a_max; ++a)
    for (long c = a + 1; c < 2 * a; ++c)
      for (long b = -2 - (c - a) + 1; b < -2 + (c - a); ++b) {
        VerificationReport one = verify_closed_form(Integer(a), Integer(b), Integer(c), cap);
        if (one.status == CheckStatus::skipped) continue;
        ++checked;
        (b <= -2 ? case1 : case2)++;
        if (one.status == CheckStatus::fail) r.failures.push_back(one.input);
      }
  r.details["checked"] = std::to_string(checked);
  r.details["case1"] = std::to_string(case1);
  r.details["case2"] = std::to_string(case2);
  r.status = checked > 0 && r.failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

std::vector<DegeneratePoint> degenerate_points(const std::vector<PeriodCell>& cells) {
  std::vector<DegeneratePoint> out;
  for (const auto& cell : cells) {
    if (cell.status != CellStatus::degenerate) continue;
    for (const auto& v : cell.polygon) {
      if (!in_cell(cell, v.c1, v.c2) && !below_parabola(v)) continue;
      Rational half(1, 2);
      Rational disc = v.c1 * v.c1 - 4 * v.c2 + 8;
      if (sgn(disc) <= 0) continue;
      out.push_back({cell.name, v, QuadraticIrrational(v.c1 * half, -half, disc),
                     QuadraticIrrational(v.c1 * half, half, disc)});
    }
  }
  return out;
}

}  // namespace salem

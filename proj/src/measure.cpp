#include "salemparry/measure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace salem {

std::string to_string(MeasureMethod m) { return m == MeasureMethod::rigorous_grid ? "rigorous-grid" : "monte-carlo"; }

std::pair<double, double> alpha_enclosure(std::uint64_t k, int level) {
  if (level < 0 || level > 60 || k > (std::uint64_t{1} << level)) throw DomainError("angle index out of range");
  mpfr_t t;
  mpfr_init2(t, 192);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_ui(t, t, static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_div_2ui(t, t, static_cast<unsigned long>(level), MPFR_RNDN);
  mpfr_cos(t, t, MPFR_RNDN);
  mpfr_mul_si(t, t, -2, MPFR_RNDN);
  // Absolute slack of 2^-180 covers the rounding of pi, the product and cos.
  mpfr_t lo, hi;
  mpfr_inits2(192, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui_2exp(lo, 1, -180, MPFR_RNDN);
  mpfr_add(hi, t, lo, MPFR_RNDU);
  mpfr_sub(lo, t, lo, MPFR_RNDD);
  std::pair<double, double> out{mpfr_get_d(lo, MPFR_RNDD), mpfr_get_d(hi, MPFR_RNDU)};
  mpfr_clears(t, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

namespace {

// F(x, y) = e0 + a1 (x + y) + a2 xy, the form a0 + a1 c1 + a2 c2 in alpha.
struct AlphaConstraint {
  double e0, a1, a2, scale;
};

struct CompiledRegion {
  std::vector<AlphaConstraint> constraints;
};

CompiledRegion compile(const Region& r) {
  CompiledRegion c;
  for (const auto& h : r) {
    Rational e0 = Rational(h.form.a0) + 2 * Rational(h.form.a2);
    AlphaConstraint a{e0.get_d(), h.form.a1.get_d(), h.form.a2.get_d(), 0};
    a.scale = std::abs(a.e0) + 4 * std::abs(a.a1) + 4 * std::abs(a.a2);
    c.constraints.push_back(a);
  }
  return c;
}

struct Interval {
  double lo, hi;
};

// Bounds of F over X x Y at one corner enclosure.
inline Interval eval_bounds(const AlphaConstraint& f, const Interval& x, const Interval& y) {
  double xm = 0.5 * (x.lo + x.hi), rx = 0.5 * (x.hi - x.lo);
  double ym = 0.5 * (y.lo + y.hi), ry = 0.5 * (y.hi - y.lo);
  double v = f.e0 + f.a1 * (xm + ym) + f.a2 * (xm * ym);
  double rad = std::abs(f.a1) * (rx + ry) + std::abs(f.a2) * (std::abs(xm) * ry + std::abs(ym) * rx + rx * ry);
  rad += 1e-14 * f.scale + 1e-300;
  return {v - rad, v + rad};
}

enum class Verdict { inside, outside, boundary };

// Bilinear forms attain their extremes over a box at its corners.
Verdict classify(const CompiledRegion& r, const Interval (&xs)[2], const Interval (&ys)[2]) {
  bool all_sat = true;
  for (const auto& f : r.constraints) {
    bool sat = true, viol = true;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Interval b = eval_bounds(f, x, y);
        if (!(b.lo > 0)) sat = false;
        if (!(b.hi < 0)) viol = false;
      }
    if (viol) return Verdict::outside;
    if (!sat) all_sat = false;
  }
  return all_sat ? Verdict::inside : Verdict::boundary;
}

struct Box {
  std::uint32_t i, j;
  std::uint32_t cand_off;
  std::uint16_t cand_len;
  std::uint8_t weight;
};

struct LevelOutput {
  std::vector<Box> children;
  std::vector<std::uint16_t> cands;
  std::uint64_t inside = 0;
  std::uint64_t boundary = 0;
};

void process_chunk(const std::vector<CompiledRegion>& regions, const std::vector<Box>& boxes,
                   const std::vector<std::uint16_t>& cands, std::size_t begin, std::size_t end,
                   const std::vector<Interval>& table, bool half_domain, bool emit_children, LevelOutput& out) {
  std::vector<std::uint16_t> keep;
  for (std::size_t b = begin; b < end; ++b) {
    const Box& box = boxes[b];
    Interval xs[2] = {table[box.i], table[box.i + 1]};
    Interval ys[2] = {table[box.j], table[box.j + 1]};
    keep.clear();
    bool inside = false;
    for (std::uint16_t c = 0; c < box.cand_len; ++c) {
      std::uint16_t r = cands[box.cand_off + c];
      Verdict v = classify(regions[r], xs, ys);
      if (v == Verdict::inside) {
        inside = true;
        break;
      }
      if (v == Verdict::boundary) keep.push_back(r);
    }
    if (inside) {
      out.inside += box.weight;
      continue;
    }
    if (keep.empty()) continue;
    out.boundary += box.weight;
    if (!emit_children) continue;
    auto off = static_cast<std::uint32_t>(out.cands.size());
    out.cands.insert(out.cands.end(), keep.begin(), keep.end());
    auto len = static_cast<std::uint16_t>(keep.size());
    std::uint32_t i2 = 2 * box.i, j2 = 2 * box.j;
    if (half_domain && box.i == box.j) {
      out.children.push_back({i2, j2, off, len, 1});
      out.children.push_back({i2, j2 + 1, off, len, 2});
      out.children.push_back({i2 + 1, j2 + 1, off, len, 1});
    } else {
      for (std::uint32_t di = 0; di < 2; ++di)
        for (std::uint32_t dj = 0; dj < 2; ++dj) out.children.push_back({i2 + di, j2 + dj, off, len, box.weight});
    }
  }
}

unsigned thread_count(unsigned requested) {
  if (requested != 0) return requested;
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

}  // namespace

std::vector<Region> cell_regions(const std::vector<PeriodCell>& cells) { return shrunken_regions(cells, Rational(0)); }

std::vector<Region> shrunken_regions(const std::vector<PeriodCell>& cells, const Rational& eps) {
  if (sgn(eps) < 0 || eps > Rational(1, 2)) throw DomainError("shrink parameter must lie in [0, 1/2]");
  std::vector<Region> out;
  for (const auto& cell : cells) {
    if (cell.status != CellStatus::cell) continue;
    Region r;
    for (const auto& g : cell.varying_forms()) {
      // eps < g and g <= 1 - eps, scaled by the denominator of eps.
      const Integer& den = eps.get_den();
      const Integer& num = eps.get_num();
      LinearForm lo{g.a0 * den - num, g.a1 * den, g.a2 * den};
      LinearForm hi{den - num - g.a0 * den, -g.a1 * den, -g.a2 * den};
      r.push_back({lo, true});
      r.push_back({hi, false});
    }
    out.push_back(std::move(r));
  }
  return out;
}

MeasureResult region_measure(const std::vector<Region>& regions, const MeasureOptions& opts) {
  if (!(opts.tolerance > 0)) throw DomainError("tolerance must be positive");
  if (regions.size() > 65535) throw DomainError("too many regions");
  if (opts.max_level < 1 || opts.max_level > 30) throw DomainError("max level must lie in [1, 30]");
  auto start = std::chrono::steady_clock::now();

  std::vector<CompiledRegion> compiled;
  for (const auto& r : regions) compiled.push_back(compile(r));

  MeasureResult res;
  std::vector<Box> boxes{{0, 0, 0, static_cast<std::uint16_t>(regions.size()), 1}};
  std::vector<std::uint16_t> cands(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r) cands[r] = static_cast<std::uint16_t>(r);

  const unsigned nthreads = thread_count(opts.threads);
  Integer inside_total = 0;  // in units of 4^-level
  Integer boundary_total = 0;
  int level = 0;
  while (true) {
    const std::uint64_t n = std::uint64_t{1} << level;
    std::vector<Interval> table(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
      auto [lo, hi] = alpha_enclosure(k, level);
      table[k] = {lo, hi};
    }
    // Deciding whether to refine needs this level's boundary mass, so
    // children are emitted speculatively unless we are at the last level.
    const bool emit = level < opts.max_level;
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(nthreads * 4, boxes.size() / 256 + 1));
    std::vector<LevelOutput> outs(chunks);
    auto work = [&](std::size_t c) {
      std::size_t b = boxes.size() * c / chunks, e = boxes.size() * (c + 1) / chunks;
      process_chunk(compiled, boxes, cands, b, e, table, opts.half_domain, emit, outs[c]);
    };
    if (nthreads <= 1 || chunks == 1) {
      for (std::size_t c = 0; c < chunks; ++c) work(c);
    } else {
      std::vector<std::thread> pool;
      std::atomic_size_t next{0};
      for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
          for (std::size_t c; (c = next.fetch_add(1)) < chunks;) work(c);
        });
      for (auto& th : pool) th.join();
    }
    res.boxes += boxes.size();
    std::uint64_t inside = 0, boundary = 0;
    for (const auto& o : outs) {
      inside += o.inside;
      boundary += o.boundary;
    }
    if (level > 0) inside_total *= 4;
    inside_total += inside;
    boundary_total = boundary;
    Rational scale(Integer(1), Integer(1) << (2 * level));
    res.levels = level;
    Rational unresolved = Rational(boundary_total) * scale;
    if (boundary == 0 || unresolved.get_d() < opts.tolerance || !emit) break;

    std::vector<Box> next_boxes;
    std::vector<std::uint16_t> next_cands;
    std::size_t total_children = 0, total_cands = 0;
    for (const auto& o : outs) {
      total_children += o.children.size();
      total_cands += o.cands.size();
    }
    next_boxes.reserve(total_children);
    next_cands.reserve(total_cands);
    for (auto& o : outs) {
      auto base = static_cast<std::uint32_t>(next_cands.size());
      next_cands.insert(next_cands.end(), o.cands.begin(), o.cands.end());
      for (Box b : o.children) {
        b.cand_off += base;
        next_boxes.push_back(b);
      }
      o = LevelOutput{};
    }
    boxes = std::move(next_boxes);
    cands = std::move(next_cands);
    ++level;
  }
  Rational scale(Integer(1), Integer(1) << (2 * res.levels));
  res.lower = Rational(inside_total) * scale;
  res.upper = Rational(inside_total + boundary_total) * scale;
  res.lower.canonicalize();
  res.upper.canonicalize();
  res.method = MeasureMethod::rigorous_grid;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

MeasureResult cell_measure(const std::vector<PeriodCell>& cells, double tolerance, unsigned threads) {
  MeasureOptions o;
  o.tolerance = tolerance;
  o.threads = threads;
  return region_measure(cell_regions(cells), o);
}

MeasureResult shrunken_cell_measure(const std::vector<PeriodCell>& cells, const Rational& eps, double tolerance,
                                    unsigned threads) {
  MeasureOptions o;
  o.tolerance = tolerance;
  o.threads = threads;
  return region_measure(shrunken_regions(cells, eps), o);
}

MeasureResult monte_carlo_measure(const std::vector<Region>& regions, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("Monte Carlo needs at least one sample");
  auto start = std::chrono::steady_clock::now();
  std::vector<CompiledRegion> compiled;
  for (const auto& r : regions) compiled.push_back(compile(r));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double x = -2 * std::cos(pi * unit(rng)), y = -2 * std::cos(pi * unit(rng));
    for (const auto& r : compiled) {
      bool in = true;
      for (const auto& f : r.constraints)
        if (!(f.e0 + f.a1 * (x + y) + f.a2 * x * y > 0)) {
          in = false;
          break;
        }
      if (in) {
        ++hits;
        break;
      }
    }
  }
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double half = 3.29 * std::sqrt(std::max(p * (1 - p), 1e-12) / static_cast<double>(samples));
  MeasureResult res;
  res.method = MeasureMethod::monte_carlo;
  res.lower = Rational(std::max(0.0, p - half));
  res.upper = Rational(std::min(1.0, p + half));
  res.boxes = samples;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace salem

#include "salemparry/survey.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

namespace salem {

bool strictly_inside(const PeriodCell& cell, const Rational& c1, const Rational& c2) {
  for (const auto& g : cell.varying_forms()) {
    Rational v = g.eval(c1, c2);
    if (!(sgn(v) > 0 && v < 1)) return false;
  }
  return true;
}

namespace {

Rational grid_value(std::uint32_t k, std::uint32_t n) {
  Rational step(4 * static_cast<long>(k) + 2, n);
  step.canonicalize();
  return step - 2;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string color_of(std::size_t idx) {
  // Golden-angle hue walk keeps neighbouring indices apart.
  long hue = static_cast<long>((idx * 137) % 360);
  long light = 45 + static_cast<long>((idx * 7) % 20);
  return "hsl(" + std::to_string(hue) + ",70%," + std::to_string(light) + "%)";
}

}  // namespace

SurveyResult survey_grid(std::uint32_t resolution, std::size_t cap, const std::vector<PeriodCell>& cells,
                         unsigned threads) {
  if (resolution < 2) throw DomainError("survey resolution must be at least 2");
  const std::uint32_t n = resolution;
  std::vector<double> w(n);
  const double pi = std::acos(-1.0);
  for (std::uint32_t k = 0; k < n; ++k) {
    double lo = -2.0 + 4.0 * k / n, hi = -2.0 + 4.0 * (k + 1) / n;
    w[k] = (std::acos(-hi / 2) - std::acos(-lo / 2)) / pi;
  }

  std::vector<std::vector<SurveyPoint>> rows(n);
  auto do_row = [&](std::uint32_t i) {
    auto& row = rows[i];
    for (std::uint32_t j = i + 1; j < n; ++j) {
      SurveyPoint p;
      p.i = i;
      p.j = j;
      p.alpha1 = grid_value(i, n);
      p.alpha2 = grid_value(j, n);
      p.weight = 2 * w[i] * w[j];
      RotationParams params = RotationParams::from_alphas(Scalar(p.alpha1), Scalar(p.alpha2));
      p.period = origin_period(params, cap);
      p.cell = locate_point(params, cells);
      if (p.cell) {
        Rational c1 = p.alpha1 + p.alpha2, c2 = p.alpha1 * p.alpha2 + 2;
        p.strictly_inside = strictly_inside(cells[*p.cell], c1, c2);
      }
      row.push_back(std::move(p));
    }
  };
  unsigned nt = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (nt <= 1) {
    for (std::uint32_t i = 0; i < n; ++i) do_row(i);
  } else {
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&] {
        for (std::uint32_t i; (i = next.fetch_add(1)) < n;) do_row(i);
      });
    for (auto& th : pool) th.join();
  }

  SurveyResult res;
  res.resolution = n;
  res.cap = cap;
  for (auto& row : rows)
    for (auto& p : row) res.points.push_back(std::move(p));
  for (std::size_t k = 0; k < res.points.size(); ++k) {
    const auto& p = res.points[k];
    if (p.cell) res.in_catalog_fraction += p.weight;
    if (p.period) res.periodic_fraction += p.weight;
    if (p.strictly_inside) {
      ++res.strictly_inside;
      std::size_t expected = cells[*p.cell].orbit_period();
      if (!p.period || *p.period != expected) res.mismatches.push_back(k);
    }
  }
  return res;
}

void write_survey_csv(std::ostream& os, const SurveyResult& s, const std::vector<PeriodCell>& cells) {
  os << "alpha1,alpha2,period,r_degree,cell\n";
  for (const auto& p : s.points) {
    os << to_string(p.alpha1) << ',' << to_string(p.alpha2) << ',';
    if (p.period) os << *p.period;
    os << ',';
    if (p.period && *p.period >= 5) os << (*p.period - 5);
    os << ',';
    if (p.cell) os << cells[*p.cell].name;
    os << '\n';
  }
}

void write_survey_svg(std::ostream& os, const SurveyResult& s) {
  const double size = 800, margin = 40;
  const double cell = size / s.resolution;
  auto px = [&](std::uint32_t k) { return margin + k * cell; };
  // alpha2 grows upwards.
  auto py = [&](std::uint32_t k) { return margin + size - (k + 1) * cell; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size + 2 * margin) << "\" height=\""
     << fmt(size + 2 * margin) << "\" viewBox=\"0 0 " << fmt(size + 2 * margin) << ' ' << fmt(size + 2 * margin)
     << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& p : s.points) {
    std::string fill;
    if (p.cell) fill = color_of(*p.cell);
    else if (p.period) fill = "#d9d9d9";
    else continue;
    for (int mirror = 0; mirror < 2; ++mirror) {
      std::uint32_t a = mirror ? p.j : p.i, b = mirror ? p.i : p.j;
      os << "<rect x=\"" << fmt(px(a)) << "\" y=\"" << fmt(py(b)) << "\" width=\"" << fmt(cell) << "\" height=\""
         << fmt(cell) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  const double r = std::max(0.8, cell * 0.35);
  for (const auto& p : s.points) {
    if (p.period) continue;
    for (int mirror = 0; mirror < 2; ++mirror) {
      std::uint32_t a = mirror ? p.j : p.i, b = mirror ? p.i : p.j;
      os << "<circle cx=\"" << fmt(px(a) + cell / 2) << "\" cy=\"" << fmt(py(b) + cell / 2) << "\" r=\"" << fmt(r)
         << "\" fill=\"black\"/>\n";
    }
  }
  os << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(size) << "\" height=\""
     << fmt(size) << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(margin + size) << "\" x2=\"" << fmt(margin + size)
     << "\" y2=\"" << fmt(margin) << "\" stroke=\"black\" stroke-dasharray=\"4 4\"/>\n";
  for (int t = -2; t <= 2; ++t) {
    double x = margin + (t + 2) * size / 4;
    double y = margin + size - (t + 2) * size / 4;
    os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(margin + size + 20) << "\" font-size=\"12\" text-anchor=\"middle\">"
       << t << "</text>\n";
    os << "<text x=\"" << fmt(margin - 10) << "\" y=\"" << fmt(y + 4) << "\" font-size=\"12\" text-anchor=\"end\">" << t
       << "</text>\n";
  }
  os << "<text x=\"" << fmt(margin + size / 2) << "\" y=\"" << fmt(margin + size + 36)
     << "\" font-size=\"13\" text-anchor=\"middle\">alpha1</text>\n";
  os << "<text x=\"12\" y=\"" << fmt(margin + size / 2) << "\" font-size=\"13\">alpha2</text>\n";
  os << "</svg>\n";
}

}  // namespace salem

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "salemparry/boundary.hpp"
#include "salemparry/catalog.hpp"
#include "salemparry/config.hpp"
#include "salemparry/expansion.hpp"
#include "salemparry/matrix.hpp"
#include "salemparry/rotation.hpp"
#include "salemparry/serialize.hpp"

using namespace salem;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

IntPolynomial poly_arg(const std::string& text) {
  if (text.empty()) throw UsageError("--poly is required");
  return parse_int_polynomial(text);
}

std::vector<PeriodCell> load_cells(const Config& cfg, const std::string& catalog, int builtin) {
  std::string path = catalog.empty() ? cfg.catalog : catalog;
  if (!path.empty()) return read_catalog(path);
  return builtin_cells(builtin);
}

// Rotation parameters from --alpha1/--alpha2, --c1/--c2, or the conjugate
// point of beta^m for a sextic --poly.
struct ParamArgs {
  std::string alpha1, alpha2, c1, c2, poly;
  unsigned long power = 1;

  void add(CLI::App* cmd) {
    cmd->add_option("--alpha1", alpha1, "first conjugate coordinate (rational)");
    cmd->add_option("--alpha2", alpha2, "second conjugate coordinate (rational)");
    cmd->add_option("--c1", c1, "rotation coefficient c1 (rational)");
    cmd->add_option("--c2", c2, "rotation coefficient c2 (rational)");
    cmd->add_option("--poly", poly, "sextic Salem polynomial; use the conjugates of beta^power");
    cmd->add_option("--power", power, "power m of beta (with --poly)")->check(CLI::PositiveNumber);
  }

  RotationParams params() const {
    if (!poly.empty()) {
      IntPolynomial p = parse_int_polynomial(poly);
      IntPolynomial pm = power == 1 ? p : power_polynomial(p, power);
      auto [a, b] = sextic_rotation_coordinates(salem_data(pm));
      return {a, b};
    }
    if (!alpha1.empty() && !alpha2.empty())
      return RotationParams::from_alphas(Scalar(parse_rational(alpha1)), Scalar(parse_rational(alpha2)));
    if (!c1.empty() && !c2.empty()) return {Scalar(parse_rational(c1)), Scalar(parse_rational(c2))};
    throw UsageError("give --alpha1/--alpha2, --c1/--c2 or --poly");
  }
};

Json params_json(const RotationParams& p) {
  auto one = [](const Scalar& s) -> Json {
    if (s.is_rational()) return to_json(s.rational());
    Json j{{"approx", s.approx()}, {"poly_in_base", to_json(primitive_part(s.poly()))}};
    j["base"] = to_json(*s.base());
    return j;
  };
  return Json{{"c1", one(p.c1)}, {"c2", one(p.c2)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beta-expansions of Salem numbers and period cells of discretized rotations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_file;
  std::optional<unsigned> threads_flag;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--threads", threads_flag, "worker threads (0: all cores)");
  app.add_option("--seed", seed_flag, "random seed");

  std::string out, poly, catalog, r_text, name;
  std::optional<std::size_t> cap;
  int builtin = 40;

  auto* expand = app.add_subcommand("expand", "beta-expansion of one for the dominant root of a polynomial");
  expand->add_option("--poly", poly, "coefficients, constant term first, e.g. '[1,-8,10,-15,10,-8,1]'")->required();
  expand->add_option("--cap", cap, "maximum number of digits");
  expand->add_option("--out", out, "write JSON here instead of stdout");

  auto* classify = app.add_subcommand("classify", "decide whether a polynomial defines a Salem number");
  classify->add_option("--poly", poly, "coefficients, constant term first")->required();
  classify->add_option("--out", out, "write JSON here instead of stdout");

  ParamArgs pargs;
  std::size_t keep = 64;
  auto* orbit = app.add_subcommand("orbit", "origin orbit of the four-term rotation map");
  pargs.add(orbit);
  orbit->add_option("--cap", cap, "maximum number of steps");
  orbit->add_option("--keep", keep, "number of k values to report");
  orbit->add_option("--out", out, "write JSON here instead of stdout");

  auto* search = app.add_subcommand("search", "shifted-addition search for R");
  pargs.add(search);
  search->add_option("--cap", cap, "maximum number of steps");
  search->add_option("--out", out, "write JSON here instead of stdout");

  bool from_r = false;
  auto* cell = app.add_subcommand("cell", "derive the period cell of R, or a whole builtin catalog");
  cell->add_option("--r", r_text, "R coefficients, constant term first");
  cell->add_option("--name", name, "cell name; alone, selects a builtin R");
  cell->add_flag("--from-R", from_r, "derive every cell of a builtin R list");
  cell->add_option("--builtin", builtin, "builtin R list (23 or 40)")->check(CLI::IsMember({23, 40}));
  cell->add_option("--out", out, "write JSON here instead of stdout");

  auto* locate = app.add_subcommand("locate", "find the catalog cell containing a point");
  pargs.add(locate);
  locate->add_option("--catalog", catalog, "catalog JSON (default: builtin)");
  locate->add_option("--builtin", builtin, "builtin catalog (23 or 40)")->check(CLI::IsMember({23, 40}));
  locate->add_option("--out", out, "write JSON here instead of stdout");

  auto* disjoint = app.add_subcommand("disjoint", "check pairwise interior-disjointness of a catalog");
  disjoint->add_option("--catalog", catalog, "catalog JSON file");
  disjoint->add_option("--builtin", builtin, "builtin catalog (23 or 40)")->check(CLI::IsMember({23, 40}));
  disjoint->add_option("--out", out, "write JSON here instead of stdout");

  std::optional<double> tolerance;
  std::string epsilon;
  std::uint64_t mc_samples = 0;
  bool full_domain = false, timing = false;
  auto* measure = app.add_subcommand("measure", "measure of the catalog under the conjugate-angle distribution");
  measure->add_option("--catalog", catalog, "catalog JSON file");
  measure->add_option("--builtin", builtin, "builtin catalog (23 or 40)")->check(CLI::IsMember({23, 40}));
  measure->add_option("--tolerance", tolerance, "stop when upper - lower is below this");
  measure->add_option("--epsilon", epsilon, "shrink every cell to eps < g <= 1 - eps");
  measure->add_option("--monte-carlo", mc_samples, "sample this many points instead of the rigorous grid");
  measure->add_flag("--full-domain", full_domain, "classify the whole square instead of one half");
  measure->add_flag("--timing", timing, "report wall-clock seconds");
  measure->add_option("--out", out, "write JSON here instead of stdout");

  std::string check = "all";
  int n_arg = 5, trials = 200, a_max = 10;
  unsigned long m_lo = 1, m_hi = 100;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--check", check, "circle, interlacing, powers, closed-form, degenerate or all")
      ->check(CLI::IsMember({"circle", "interlacing", "powers", "closed-form", "degenerate", "all"}));
  verify->add_option("--n", n_arg, "half degree for circle and interlacing");
  verify->add_option("--trials", trials, "random trials for circle");
  verify->add_option("--poly", poly, "sextic Salem polynomial for the powers check");
  verify->add_option("--m-lo", m_lo, "first power for the powers check");
  verify->add_option("--m-hi", m_hi, "last power for the powers check");
  verify->add_option("--a-max", a_max, "largest a for the closed-form scan");
  verify->add_option("--catalog", catalog, "catalog JSON file");
  verify->add_option("--builtin", builtin, "builtin catalog (23 or 40)")->check(CLI::IsMember({23, 40}));
  verify->add_option("--cap", cap, "expansion cap");
  verify->add_option("--out", out, "write JSON here instead of stdout");

  std::uint32_t res = 200;
  std::string svg;
  auto* survey = app.add_subcommand("survey", "origin-orbit periods on a grid of conjugate coordinates");
  survey->add_option("--res", res, "grid resolution per axis")->check(CLI::Range(2u, 100000u));
  survey->add_option("--cap", cap, "orbit cap");
  survey->add_option("--catalog", catalog, "catalog JSON file");
  survey->add_option("--builtin", builtin, "builtin catalog (23 or 40)")->check(CLI::IsMember({23, 40}));
  survey->add_option("--out", out, "CSV output (default stdout)");
  survey->add_option("--svg", svg, "heat map output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Config cfg = load_config(config_file.empty() ? std::nullopt : std::optional<std::string>(config_file));
    if (threads_flag) cfg.threads = *threads_flag;
    if (seed_flag) cfg.seed = *seed_flag;
    if (tolerance) cfg.tolerance = *tolerance;

    if (*expand) {
      IntPolynomial p = poly_arg(poly);
      ExpansionRecord rec = expand_one(p, cap.value_or(cfg.expand_cap));
      Json j = to_json(rec);
      j["poly"] = to_json(p);
      emit(j, out);
      return kOk;
    }
    if (*classify) {
      IntPolynomial p = poly_arg(poly);
      SalemVerdict v = classify_salem(p);
      Json j = to_json(v);
      j["poly"] = to_json(p);
      if (p.degree() == 6 && is_self_reciprocal(p)) {
        try {
          WellPosedReport w = well_posed_sextic(p);
          j["well_posed"] = Json{{"well_posed", w.well_posed}, {"roots_placed", w.roots_placed}, {"failed", w.failed}};
        } catch (const DomainError&) {
          j["well_posed"] = nullptr;
        }
      }
      emit(j, out);
      return kOk;
    }
    if (*orbit) {
      RotationParams rp = pargs.params();
      OrbitRecord rec = orbit_from_origin(rp, cap.value_or(cfg.orbit_cap), keep);
      Json j = to_json(rec);
      j["params"] = params_json(rp);
      emit(j, out);
      return kOk;
    }
    if (*search) {
      RotationParams rp = pargs.params();
      auto r = shifted_addition_search(rp, cap.value_or(cfg.orbit_cap));
      Json j{{"params", params_json(rp)}};
      j["r"] = r ? to_json(*r) : Json(nullptr);
      if (r) j["r_degree"] = r->degree();
      emit(j, out);
      return kOk;
    }
    if (*cell) {
      if (from_r) {
        std::vector<PeriodCell> cells = builtin_cells(builtin);
        if (out.empty()) std::cout << catalog_to_json(cells).dump(1) << '\n';
        else write_catalog(out, cells);
        return kOk;
      }
      IntPolynomial r;
      if (!r_text.empty()) {
        r = parse_int_polynomial(r_text);
      } else if (!name.empty()) {
        auto entries = builtin_entries(40);
        auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
        if (it == entries.end()) throw UsageError("no builtin cell named " + name);
        r = it->r;
      } else {
        throw UsageError("give --r, --name or --from-R");
      }
      PeriodCell c = derive_cell(r, name);
      Json j = to_json(c);
      if (c.status == CellStatus::cell) {
        Json edges = Json::array();
        for (const auto& e : c_boundary(c)) edges.push_back(e.to_string());
        j["c_boundary"] = edges;
      }
      emit(j, out);
      return kOk;
    }
    if (*locate) {
      std::vector<PeriodCell> cells = load_cells(cfg, catalog, builtin);
      RotationParams rp = pargs.params();
      auto idx = locate_point(rp, cells);
      Json j{{"params", params_json(rp)}};
      j["cell"] = idx ? Json(cells[*idx].name) : Json(nullptr);
      if (idx) j["orbit_period"] = cells[*idx].orbit_period();
      emit(j, out);
      return kOk;
    }
    if (*disjoint) {
      std::vector<PeriodCell> cells = load_cells(cfg, catalog, builtin);
      Json overlaps = Json::array();
      std::size_t pairs = 0;
      for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
          ++pairs;
          DisjointnessResult d = cells_disjoint(cells[a], cells[b]);
          if (!d.disjoint) {
            Json o{{"a", cells[a].name}, {"b", cells[b].name}};
            if (d.witness) o["witness"] = Json::array({to_json(d.witness->c1), to_json(d.witness->c2)});
            overlaps.push_back(o);
          }
        }
      emit(Json{{"pairs", pairs}, {"overlaps", overlaps}, {"disjoint", overlaps.empty()}}, out);
      return overlaps.empty() ? kOk : kCheckFailed;
    }
    if (*measure) {
      std::vector<PeriodCell> cells = load_cells(cfg, catalog, builtin);
      Rational eps = epsilon.empty() ? Rational(0) : parse_rational(epsilon);
      std::vector<Region> regions = shrunken_regions(cells, eps);
      MeasureResult m;
      if (mc_samples > 0) {
        m = monte_carlo_measure(regions, mc_samples, cfg.seed);
      } else {
        MeasureOptions o;
        o.tolerance = cfg.tolerance;
        o.threads = cfg.threads;
        o.half_domain = !full_domain;
        m = region_measure(regions, o);
      }
      Json j = to_json(m, timing);
      j["cells"] = regions.size();
      if (!epsilon.empty()) j["epsilon"] = to_json(eps);
      emit(j, out);
      return kOk;
    }
    if (*verify) {
      std::size_t expand_cap = cap.value_or(cfg.expand_cap);
      Json reports = Json::array();
      bool failed = false;
      auto add = [&](const VerificationReport& r) {
        failed = failed || r.status == CheckStatus::fail;
        reports.push_back(to_json(r));
      };
      bool all = check == "all";
      if (all || check == "circle") add(verify_unit_circle(n_arg, trials, cfg.seed));
      if (all || check == "interlacing") add(verify_interlacing(n_arg));
      if (all || check == "closed-form") add(verify_closed_form_scan(a_max, expand_cap));
      if (all || check == "powers") {
        IntPolynomial p = poly.empty() ? int_poly({1, -8, 10, -15, 10, -8, 1}) : parse_int_polynomial(poly);
        PowerCheckOptions so;
        so.m_lo = m_lo;
        so.m_hi = m_hi;
        so.cap = expand_cap;
        add(verify_power_words(p, load_cells(cfg, catalog, builtin), so));
      }
      if (all || check == "degenerate") {
        // A point whose cell collapses to a single vertex.
        RotationParams rp{Scalar(Rational(22, 7)), Scalar(Rational(31, 7))};
        VerificationReport r;
        r.name = "degenerate";
        r.input = "c1=22/7 c2=31/7";
        auto rr = shifted_addition_search(rp, cfg.orbit_cap);
        if (rr) {
          PeriodCell dc = derive_cell(*rr, "D");
          auto pts = degenerate_points({dc});
          r.details["r_degree"] = std::to_string(rr->degree());
          r.details["status"] = to_string(dc.status);
          if (!pts.empty()) {
            r.details["alpha1"] = pts[0].alpha_small.to_string();
            r.details["alpha2"] = pts[0].alpha_large.to_string();
          }
          r.status = dc.status == CellStatus::degenerate && pts.size() == 1 ? CheckStatus::pass : CheckStatus::fail;
        } else {
          r.status = CheckStatus::fail;
        }
        if (r.status == CheckStatus::fail) r.failures.push_back(r.input);
        add(r);
      }
      emit(Json{{"reports", reports}, {"pass", !failed}}, out);
      return failed ? kCheckFailed : kOk;
    }
    if (*survey) {
      std::vector<PeriodCell> cells = load_cells(cfg, catalog, builtin);
      SurveyResult s = survey_grid(res, cap.value_or(cfg.orbit_cap), cells, cfg.threads);
      if (out.empty()) {
        write_survey_csv(std::cout, s, cells);
      } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        write_survey_csv(f, s, cells);
      }
      if (!svg.empty()) {
        std::ofstream f(svg);
        if (!f) throw std::runtime_error("cannot write " + svg);
        write_survey_svg(f, s);
      }
      std::cerr << "in-catalog fraction " << s.in_catalog_fraction << ", periodic fraction " << s.periodic_fraction
                << ", strictly inside " << s.strictly_inside << ", mismatches " << s.mismatches.size() << '\n';
      return s.mismatches.empty() ? kOk : kCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

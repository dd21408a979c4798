#include "salemparry/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace salem {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string", 0);
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer '" + j.get<std::string>() + "'", 0);
    return z;
  }
  throw ParseError("expected an integer", 0);
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty coefficient array", 0);
  std::vector<Integer> c;
  for (const auto& v : j) c.push_back(integer_from_json(v));
  return IntPolynomial(std::move(c));
}

Json to_json(const RealAlgebraic& a) {
  RationalInterval iv = a.interval();
  return Json{{"poly", to_json(a.minpoly())}, {"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
}

RealAlgebraic algebraic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poly") || !j.contains("lo") || !j.contains("hi"))
    throw ParseError("algebraic number needs poly, lo and hi", 0);
  return RealAlgebraic(polynomial_from_json(j["poly"]), rational_from_json(j["lo"]), rational_from_json(j["hi"]));
}

Json to_json(const PeriodicWord& w) {
  Json pre = Json::array(), per = Json::array();
  for (const auto& d : w.prefix) pre.push_back(to_json(d));
  for (const auto& d : w.period) per.push_back(to_json(d));
  return Json{{"prefix", pre}, {"period", per}};
}

Json to_json(const ExpansionRecord& r) {
  Json j{{"status", to_string(r.status)}, {"states_visited", r.states_visited}};
  if (r.status == ExpansionStatus::periodic) {
    PeriodicWord w = r.word().canonical();
    j["m"] = w.preperiod();
    j["p"] = w.period_length();
    j["word"] = to_json(w);
  } else {
    j["m"] = nullptr;
    j["p"] = nullptr;
    j["digits_computed"] = r.digits.size();
  }
  return j;
}

Json to_json(const SalemVerdict& v) {
  Json j{{"salem", v.salem}, {"reason", v.reason}};
  if (v.data) {
    j["beta"] = to_json(v.data->beta);
    j["gamma"] = to_json(v.data->gamma);
    j["trace"] = to_json(v.data->trace);
    Json al = Json::array();
    for (const auto& a : v.data->alphas) al.push_back(to_json(a));
    j["alphas"] = al;
    std::ostringstream os;
    os.precision(17);
    os << v.data->beta.approx();
    j["beta_approx"] = os.str();
  }
  return j;
}

Json to_json(const OrbitRecord& r) {
  Json ks = Json::array();
  for (const auto& k : r.ks) ks.push_back(to_json(k));
  Json j{{"status", to_string(r.status)}, {"iterations", r.iterations}, {"ks", ks}};
  j["period"] = r.period ? Json(*r.period) : Json(nullptr);
  return j;
}

Json to_json(const LinearForm& f) { return Json::array({to_json(f.a0), to_json(f.a1), to_json(f.a2)}); }

Json to_json(const AlphaPiece& p) {
  Json curve = Json::array();
  for (const auto& k : p.curve) curve.push_back(to_json(k));
  return Json{{"curve", curve},
              {"side", p.lower ? "lower" : "upper"},
              {"strict", p.strict},
              {"x_lo", p.x_lo.to_string()},
              {"x_hi", p.x_hi.to_string()},
              {"text", p.to_string()}};
}

Json to_json(const PeriodCell& c) {
  Json forms = Json::array(), poly = Json::array(), ones = Json::array(), checks = Json::array(), bnd = Json::array();
  for (const auto& f : c.forms) forms.push_back(to_json(f));
  for (const auto& v : c.polygon) poly.push_back(Json::array({to_json(v.c1), to_json(v.c2)}));
  for (auto i : c.one_indices) ones.push_back(i);
  for (const auto& chk : c.one_checks)
    checks.push_back(Json{{"index", chk.index}, {"sum_excess", to_json(chk.sum_excess)}, {"gap", to_json(chk.gap)},
                          {"holds", chk.holds}});
  if (c.status == CellStatus::cell)
    for (const auto& p : alpha_boundary(c)) bnd.push_back(to_json(p));
  return Json{{"name", c.name},
              {"r", to_json(c.r)},
              {"forms", forms},
              {"one_indices", ones},
              {"one_checks", checks},
              {"polygon", poly},
              {"status", to_string(c.status)},
              {"symmetric", c.symmetric},
              {"side_conditions_hold", c.side_conditions_hold},
              {"orbit_period", c.orbit_period()},
              {"area", to_json(polygon_area(c.polygon))},
              {"alpha_boundary", bnd}};
}

PeriodCell cell_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r")) throw ParseError("cell entry needs an 'r' polynomial", 0);
  std::string name = j.value("name", "");
  PeriodCell cell = derive_cell(polynomial_from_json(j["r"]), name);
  if (j.contains("forms")) {
    const Json& f = j["forms"];
    bool same = f.is_array() && f.size() == cell.forms.size();
    for (std::size_t i = 0; same && i < f.size(); ++i) same = f[i] == to_json(cell.forms[i]);
    if (!same) throw ParseError("stored forms of cell '" + name + "' disagree with R", 0);
  }
  if (j.contains("polygon")) {
    Json poly = Json::array();
    for (const auto& v : cell.polygon) poly.push_back(Json::array({to_json(v.c1), to_json(v.c2)}));
    if (j["polygon"] != poly) throw ParseError("stored polygon of cell '" + name + "' disagrees with R", 0);
  }
  return cell;
}

Json to_json(const MeasureResult& m, bool with_seconds) {
  Json j{{"lower", to_json(m.lower)},
         {"upper", to_json(m.upper)},
         {"lower_approx", m.lower.get_d()},
         {"upper_approx", m.upper.get_d()},
         {"method", to_string(m.method)},
         {"boxes", m.boxes},
         {"levels", m.levels}};
  if (m.method == MeasureMethod::monte_carlo) j["interval"] = "99.9% normal confidence interval";
  if (with_seconds) j["seconds"] = m.seconds;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  return Json{{"check", r.name}, {"status", to_string(r.status)}, {"input", r.input}, {"details", details},
              {"failures", r.failures}};
}

Json catalog_to_json(const std::vector<PeriodCell>& cells) {
  Json arr = Json::array();
  for (const auto& c : cells) arr.push_back(to_json(c));
  return Json{{"cells", arr}};
}

std::vector<PeriodCell> catalog_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) throw ParseError("catalog needs a 'cells' array", 0);
  std::vector<PeriodCell> out;
  for (const auto& c : j["cells"]) out.push_back(cell_from_json(c));
  return out;
}

std::vector<PeriodCell> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what(), e.byte);
  }
  return catalog_from_json(j);
}

void write_catalog(const std::string& path, const std::vector<PeriodCell>& cells) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write catalog " + path);
  out << catalog_to_json(cells).dump(1) << '\n';
}

}  // namespace salem

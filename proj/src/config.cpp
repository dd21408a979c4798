#include "salemparry/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "salemparry/numeric.hpp"

namespace salem {

namespace {

const char* const kKeys[] = {"expand_cap", "orbit_cap", "tolerance", "catalog", "format", "threads", "seed"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_unsigned(const std::string& key, const std::string& v) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ParseError("bad value '" + v + "' for " + key, 0);
  return out;
}

}  // namespace

void apply_setting(Config& c, const std::string& key, const std::string& value) {
  if (key == "expand_cap") c.expand_cap = parse_unsigned<std::size_t>(key, value);
  else if (key == "orbit_cap") c.orbit_cap = parse_unsigned<std::size_t>(key, value);
  else if (key == "threads") c.threads = parse_unsigned<unsigned>(key, value);
  else if (key == "seed") c.seed = parse_unsigned<std::uint64_t>(key, value);
  else if (key == "catalog") c.catalog = value;
  else if (key == "format") {
    if (value != "json" && value != "csv") throw ParseError("format must be json or csv", 0);
    c.format = value;
  } else if (key == "tolerance") {
    double t = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), t);
    if (ec != std::errc() || ptr != value.data() + value.size()) t = parse_rational(value).get_d();
    if (!(t > 0)) throw ParseError("tolerance must be positive", 0);
    c.tolerance = t;
  } else {
    throw ParseError("unknown setting '" + key + "'", 0);
  }
}

void apply_config_text(Config& c, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_start);
    try {
      apply_setting(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")), line_start);
    }
  }
}

void apply_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(c, ss.str());
}

void apply_environment(Config& c, const std::function<std::optional<std::string>(const std::string&)>& getenv) {
  for (const char* key : kKeys) {
    std::string var = "SALEMPARRY_";
    for (const char* p = key; *p; ++p) var += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    if (auto v = getenv(var)) apply_setting(c, key, *v);
  }
}

Config load_config(const std::optional<std::string>& file) {
  Config c;
  if (file) apply_config_file(c, *file);
  apply_environment(c, [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  });
  return c;
}

}  // namespace salem

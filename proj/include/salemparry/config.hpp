#ifndef SALEMPARRY_CONFIG_HPP
#define SALEMPARRY_CONFIG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace salem {

struct Config {
  std::size_t expand_cap = 1000000;
  std::size_t orbit_cap = 50000;
  double tolerance = 5e-4;
  std::string catalog;  // empty: builtin
  std::string format = "json";
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = 1;
};

/// Sets one key (expand_cap, orbit_cap, tolerance, catalog, format,
/// threads, seed); throws ParseError on unknown keys or bad values.
void apply_setting(Config& c, const std::string& key, const std::string& value);

/// "key = value" lines; '#' starts a comment.
void apply_config_text(Config& c, const std::string& text);
void apply_config_file(Config& c, const std::string& path);

/// SALEMPARRY_<KEY> variables, e.g. SALEMPARRY_ORBIT_CAP.
void apply_environment(Config& c, const std::function<std::optional<std::string>(const std::string&)>& getenv);

/// Defaults, then the file (if any), then the process environment.
Config load_config(const std::optional<std::string>& file);

}  // namespace salem

#endif

#include "pshua/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pshua/errors.hpp"
#include "pshua/integer.hpp"

namespace pshua {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& v, const std::string& where) {
  std::uint64_t out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw DomainError(where + ": expected an unsigned integer");
  return out;
}

double parse_positive_real(const std::string& v, const std::string& where) {
  // fractions are accepted so that epsilon can be given exactly as 1/100
  const mpq_class q = parse_fraction(v);
  if (q <= 0) throw DomainError(where + ": expected a positive value");
  return q.get_d();
}

}  // namespace

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(lineno);
    if (eq == std::string::npos) throw DomainError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw DomainError(where + ": empty value for '" + key + "'");
    if (key == "sieve_limit") {
      c.sieve_limit = parse_u64(value, where);
      if (c.sieve_limit < 2) throw DomainError(where + ": sieve_limit must be at least 2");
    } else if (key == "sieve_cache") {
      c.sieve_cache = value;
    } else if (key == "sigma") {
      c.sigma = parse_fraction(value);
      if (c.sigma <= 0 || c.sigma > mpq_class(1, 6)) throw DomainError(where + ": sigma must lie in (0, 1/6]");
    } else if (key == "singular_cutoff") {
      c.singular_cutoff = parse_u64(value, where);
      if (c.singular_cutoff < 2) throw DomainError(where + ": singular_cutoff must be at least 2");
    } else if (key == "audit_epsilon") {
      c.audit_epsilon = parse_positive_real(value, where);
    } else if (key == "output_format") {
      if (value == "csv") {
        c.output_format = OutputFormat::csv;
      } else if (value == "json") {
        c.output_format = OutputFormat::json;
      } else {
        throw DomainError(where + ": output_format must be csv or json");
      }
    } else if (key == "threads") {
      const auto t = parse_u64(value, where);
      if (t < 1 || t > 1024) throw DomainError(where + ": threads must lie in [1, 1024]");
      c.threads = static_cast<unsigned>(t);
    } else if (key == "seed") {
      c.seed = parse_u64(value, where);
    } else {
      throw DomainError(where + ": unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::filesystem::path resolve_cache_path(const std::optional<std::filesystem::path>& flag, const RunConfig& config,
                                         std::uint64_t limit) {
  if (flag) return *flag;
  if (const char* dir = std::getenv("PSHUA_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / ("sieve-" + std::to_string(limit) + ".bin");
  }
  return config.sieve_cache;
}

}  // namespace pshua

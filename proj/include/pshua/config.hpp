#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace pshua {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::uint64_t sieve_limit = 10'000'000;
  std::filesystem::path sieve_cache;  // empty: no cache unless PSHUA_CACHE_DIR is set
  mpq_class sigma{1, 6};
  std::uint64_t singular_cutoff = 1000;
  double audit_epsilon = 0.01;
  OutputFormat output_format = OutputFormat::csv;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

// Line-oriented "key = value" text; '#' starts a comment. Unknown keys and
// invalid values throw DomainError naming the line.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// Cache file for a sieve of the given limit: explicit flag, then
// PSHUA_CACHE_DIR, then the config entry. Empty when none applies.
std::filesystem::path resolve_cache_path(const std::optional<std::filesystem::path>& flag, const RunConfig& config,
                                         std::uint64_t limit);

std::string to_string(OutputFormat f);

}  // namespace pshua

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "opf/exact_core.hpp"

namespace opf::cli {

using exact::OverpartitionTable;

inline constexpr std::string_view kCacheEnvVar = "OPF_CACHE_DIR";
inline constexpr std::string_view kDefaultCacheDir = ".opf_cache";
inline constexpr std::string_view kCacheFileName = "overpartitions.cache";

/// Flag beats the environment, which beats the default.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

std::filesystem::path cache_path(const std::filesystem::path& dir);

/// Text form: "OPFCACHE v1 max_n=N" then p(0)..p(N), one per line.
std::string serialize_cache(const OverpartitionTable& table);

/// Rejects malformed headers, wrong line counts, non-positive or decreasing
/// values, and recurrence mismatches in the first and last 100 entries.
/// Throws CacheError naming the offending line.
OverpartitionTable parse_cache(std::string_view text);

/// nullopt when the file does not exist.
std::optional<OverpartitionTable> load_cache(const std::filesystem::path& file);

/// Atomic replace through a temporary file in the same directory.
void write_cache(const std::filesystem::path& file, const OverpartitionTable& table);

struct EnsureResult {
  OverpartitionTable table;
  bool written = false;
};

/// Loads the cache in `dir`, extends it to max_n if needed and writes it back
/// under an exclusive lock. An already sufficient cache is left byte-for-byte alone.
EnsureResult ensure_table(const std::filesystem::path& dir, std::size_t max_n);

}  // namespace opf::cli

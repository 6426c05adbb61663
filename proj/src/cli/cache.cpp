#include "opf/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "opf/errors.hpp"

namespace opf::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kHeaderPrefix = "OPFCACHE v1 max_n=";
constexpr std::size_t kRecheck = 100;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// flock on a sidecar file; released on destruction.
class ExclusiveLock {
 public:
  explicit ExclusiveLock(const fs::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw CacheError("cannot open lock file " + path.string() + ": " + std::strerror(errno));
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw CacheError("cannot lock " + path.string() + ": " + std::strerror(errno));
    }
  }
  ~ExclusiveLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  ExclusiveLock(const ExclusiveLock&) = delete;
  ExclusiveLock& operator=(const ExclusiveLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv(std::string(kCacheEnvVar).c_str()); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path(kDefaultCacheDir);
}

fs::path cache_path(const fs::path& dir) { return dir / kCacheFileName; }

std::string serialize_cache(const OverpartitionTable& table) {
  std::string out;
  out += kHeaderPrefix;
  out += std::to_string(table.max_n());
  out += '\n';
  for (const auto& v : table.values()) {
    out += v.get_str();
    out += '\n';
  }
  return out;
}

OverpartitionTable parse_cache(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) throw CacheError("cache: missing trailing newline");
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw CacheError("cache: empty file");
  const std::string_view header = lines.front();
  if (header.substr(0, kHeaderPrefix.size()) != kHeaderPrefix || !all_digits(header.substr(kHeaderPrefix.size()))) {
    throw CacheError("cache line 1: bad header '" + std::string(header) + "'");
  }
  const std::string digits(header.substr(kHeaderPrefix.size()));
  if (digits.size() > 12) throw CacheError("cache line 1: max_n out of range");
  const std::size_t max_n = std::stoull(digits);
  if (lines.size() != max_n + 2) {
    throw CacheError("cache: header declares max_n=" + std::to_string(max_n) + " but file holds " +
                     std::to_string(lines.size() - 1) + " values (expected " + std::to_string(max_n + 1) + ")");
  }
  std::vector<mpz_class> values;
  values.reserve(max_n + 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::string where = "cache line " + std::to_string(i + 1) + " (n=" + std::to_string(i - 1) + ")";
    if (!all_digits(line) || (line.size() > 1 && line.front() == '0')) {
      throw CacheError(where + ": not a canonical decimal integer");
    }
    values.emplace_back(std::string(line), 10);
    if (values.back() <= 0) throw CacheError(where + ": value must be positive");
    if (values.size() >= 2 && values.back() < values[values.size() - 2]) {
      throw CacheError(where + ": sequence must be non-decreasing");
    }
  }
  if (values.front() != 1) throw CacheError("cache line 2 (n=0): expected 1");
  const std::size_t head_end = std::min(max_n, kRecheck);
  if (auto bad = exact::first_recurrence_violation(values, 1, head_end)) {
    throw CacheError("cache line " + std::to_string(*bad + 2) + " (n=" + std::to_string(*bad) +
                     "): recurrence mismatch");
  }
  if (max_n > kRecheck) {
    const std::size_t tail_start = std::max(head_end + 1, max_n - kRecheck + 1);
    if (auto bad = exact::first_recurrence_violation(values, tail_start, max_n)) {
      throw CacheError("cache line " + std::to_string(*bad + 2) + " (n=" + std::to_string(*bad) +
                       "): recurrence mismatch");
    }
  }
  return OverpartitionTable(std::move(values));
}

std::optional<OverpartitionTable> load_cache(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    if (!fs::exists(file)) return std::nullopt;
    throw CacheError("cannot read " + file.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_cache(buffer.str());
  } catch (const CacheError& e) {
    throw CacheError(file.string() + ": " + e.what());
  }
}

void write_cache(const fs::path& file, const OverpartitionTable& table) {
  const fs::path tmp = file.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << serialize_cache(table);
    out.flush();
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    fs::remove(tmp);
    throw CacheError("cannot replace " + file.string() + ": " + ec.message());
  }
}

EnsureResult ensure_table(const fs::path& dir, std::size_t max_n) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir.string() + ": " + ec.message());
  const fs::path file = cache_path(dir);
  ExclusiveLock lock(file.string() + ".lock");
  std::optional<OverpartitionTable> cached = load_cache(file);
  if (cached && cached->max_n() >= max_n) return {std::move(*cached), false};
  OverpartitionTable table = cached ? cached->extended(max_n) : exact::build_table(max_n);
  write_cache(file, table);
  return {std::move(table), true};
}

}  // namespace opf::cli

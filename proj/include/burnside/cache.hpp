#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

namespace burnside {

/// Content-addressed file cache: entries are keyed by a hash of everything
/// that determines the artifact, so a stale directory can never serve a
/// wrong answer, only a missing one. All failures (unreadable directory,
/// torn entry) degrade to a miss; the cache is an accelerator, not a store
/// of record.
class DiskCache {
 public:
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

  [[nodiscard]] bool enabled() const { return !dir_.empty(); }

  [[nodiscard]] static std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  [[nodiscard]] std::optional<std::string> get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    std::ofstream out(path_for(key), std::ios::binary);
    out << value;
  }

 private:
  [[nodiscard]] std::string path_for(const std::string& key) const {
    std::ostringstream os;
    os << dir_ << "/" << std::hex << fnv1a(key) << ".cache";
    return os.str();
  }

  std::string dir_;
};

}  // namespace burnside

#pragma once

#include "unicell/enumerate.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unicell::cli {

inline constexpr const char* kCacheEnv = "UNICELL_CACHE_DIR";

std::string sha256_hex(std::string_view data);

// The --cache flag when given, otherwise the environment variable.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

class CensusCache {
 public:
  explicit CensusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path file_for(const std::string& family, int bound) const;

  // nullopt when missing, unreadable, from another schema or failing its hash.
  std::optional<CountTable> load(const std::string& family, int bound, const std::vector<std::string>& key_names) const;
  void store(const std::string& family, int bound, const std::vector<std::string>& key_names,
             const CountTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace unicell::cli

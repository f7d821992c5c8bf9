#include "unicell/cli/cache.hpp"

#include "unicell/cli/serialize.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace unicell::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path CensusCache::file_for(const std::string& family, int bound) const {
  return dir_ / (family + "-" + std::to_string(bound) + ".json");
}

std::optional<CountTable> CensusCache::load(const std::string& family, int bound,
                                            const std::vector<std::string>& key_names) const {
  std::ifstream in(file_for(family, bound));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    Json doc = Json::parse(buffer.str());
    if (doc.at("schema").get<int>() != kSchemaVersion) return std::nullopt;
    if (doc.at("family").get<std::string>() != family || doc.at("bound").get<int>() != bound) return std::nullopt;
    const Json& body = doc.at("body");
    if (doc.at("sha256").get<std::string>() != sha256_hex(body.dump())) return std::nullopt;
    return table_from_json(body, key_names);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CensusCache::store(const std::string& family, int bound, const std::vector<std::string>& key_names,
                        const CountTable& table) const {
  std::filesystem::create_directories(dir_);
  Json body = table_to_json(table, key_names);
  Json doc = Json::object();
  doc["schema"] = kSchemaVersion;
  doc["family"] = family;
  doc["bound"] = bound;
  doc["sha256"] = sha256_hex(body.dump());
  doc["body"] = std::move(body);
  const auto path = file_for(family, bound);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << dump(doc);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace unicell::cli

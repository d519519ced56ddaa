#include "grp/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/sha.h>

namespace grp {

std::string group_digest(const PermGroup &G) {
  std::ostringstream canon;
  canon << "degree " << G.degree() << "\n";
  std::vector<std::vector<Point>> images;
  for (const Perm &g : G.generators())
    images.push_back(g.images());
  std::sort(images.begin(), images.end());
  for (const std::vector<Point> &img : images) {
    for (Point p : img)
      canon << p << " ";
    canon << "\n";
  }
  std::string bytes = canon.str();

  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char *>(bytes.data()), bytes.size(),
         digest);
  static const char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : digest) {
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 15]);
  }
  return out;
}

namespace {

std::string default_dir() {
  const char *env = std::getenv("GRP_CACHE_DIR");
  return env && *env ? env : ".grp-cache";
}

} // namespace

Cache::Cache() : dir_(default_dir()) {}

Cache::Cache(std::string dir) : dir_(std::move(dir)) {}

std::optional<nlohmann::json> Cache::load(const std::string &kind,
                                          const std::string &key) const {
  std::ifstream in(dir_ + "/" + kind + "-" + key + ".json");
  if (!in)
    return std::nullopt;
  nlohmann::json entry;
  try {
    in >> entry;
  } catch (const nlohmann::json::parse_error &) {
    return std::nullopt;
  }
  if (!entry.is_object() || entry.value("version", "") != kCacheVersion)
    return std::nullopt;
  if (!entry.contains("payload"))
    return std::nullopt;
  return entry["payload"];
}

void Cache::store(const std::string &kind, const std::string &key,
                  const nlohmann::json &payload) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json entry;
  entry["version"] = kCacheVersion;
  entry["payload"] = payload;

  std::string path = dir_ + "/" + kind + "-" + key + ".json";
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << entry.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

} // namespace grp

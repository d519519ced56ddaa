#ifndef GRP_CACHE_HPP
#define GRP_CACHE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "grp/perm_group.hpp"

namespace grp {

inline constexpr char kCacheVersion[] = "grp-1";

// SHA-256 hex digest of the degree plus the sorted generator image
// sequences; equal groups given by the same generator set hash equally
std::string group_digest(const PermGroup &G);

/// One JSON file per entry under a cache directory (GRP_CACHE_DIR, default
/// ".grp-cache"). Entries carry a version tag; mismatched tags are ignored.
/// Writes go to a temporary file first and are renamed into place.
class Cache {
public:
  Cache();
  explicit Cache(std::string dir);

  const std::string &directory() const { return dir_; }

  std::optional<nlohmann::json> load(const std::string &kind,
                                     const std::string &key) const;
  void store(const std::string &kind, const std::string &key,
             const nlohmann::json &payload) const;

private:
  std::string dir_;
};

} // namespace grp

#endif

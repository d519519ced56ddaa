#ifndef GRP_CATALOG_HPP
#define GRP_CATALOG_HPP

#include <string>
#include <vector>

#include "grp/perm_group.hpp"

namespace grp {

/// A named test-corpus group. Entries are deterministic: the same sweep
/// always produces the same names, orders and generator sequences.
struct CatalogEntry {
  std::string name;
  PermGroup group;
};

/// `Small` is the order ≤ 1000 corpus used by the oracle suites, `Families`
/// adds the linear families and the wreath example up to order 10^4, `All`
/// adds the sampled-only groups beyond the full-lattice bound.
enum class CatalogSweep { Small, Families, All };

std::vector<CatalogEntry> catalog(CatalogSweep sweep);

} // namespace grp

#endif

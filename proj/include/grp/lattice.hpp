#ifndef GRP_LATTICE_HPP
#define GRP_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grp/group_ops.hpp"
#include "grp/perm_group.hpp"

namespace grp {

// subgroup_classes rejects groups larger than this
inline constexpr std::uint64_t kLatticeBound = 10000;

// brute_subgroups rejects groups larger than this
inline constexpr std::uint64_t kBruteBound = 1000;

struct SubgroupClass {
  PermGroup representative;
  std::uint64_t class_size;
  std::string canonical_key; // lex-least element-set key in the class
};

/// All conjugacy classes of subgroups (or of p-subgroups) of `parent`,
/// ordered by (order, canonical_key); includes the trivial class and the
/// full-group class (the latter only in the unrestricted table).
struct SubgroupClassTable {
  PermGroup parent;
  std::vector<SubgroupClass> classes;

  std::uint64_t total_subgroup_count() const;
};

// cyclic extension from perfect cores; complete up to conjugacy
SubgroupClassTable subgroup_classes(const PermGroup &G);

// conjugacy classes of p-subgroups (upward walk by prime-p steps only)
SubgroupClassTable p_subgroup_classes(const PermGroup &G, unsigned p);

// every subgroup of G, as joins of cyclic subgroups to fixpoint; oracle
// use only — O(|subgroups| · |cyclics|) closures
std::vector<PermGroup> brute_subgroups(const PermGroup &G);

// last term of the derived series
PermGroup perfect_residual(const PermGroup &G);

// representatives of the conjugacy classes of perfect subgroups, trivial
// group excluded; found by 2-generator search inside the perfect residual
std::vector<PermGroup> perfect_subgroup_classes(const PermGroup &G);

struct DivSylMode {
  enum Kind { Full, Sampled } kind = Full;
  std::uint64_t seed = 0;
  unsigned count = 64;

  static DivSylMode full() { return DivSylMode{Full, 0, 0}; }
  static DivSylMode sampled(std::uint64_t seed, unsigned count) {
    return DivSylMode{Sampled, seed, count};
  }
};

struct DivSylClassRecord {
  std::uint64_t order;
  std::uint64_t class_size; // 0 in sampled mode (class not enumerated)
  std::uint64_t nu_p;
  bool divides;
  std::vector<Perm> generators; // witness generators of the representative
};

struct DivSylReport {
  unsigned prime;
  std::uint64_t group_order;
  std::uint64_t nu_p_G;
  DivSylMode mode;
  std::vector<DivSylClassRecord> classes;
  std::vector<std::size_t> violations; // indices into classes
  std::uint64_t elapsed_ms = 0;

  bool satisfies() const { return violations.empty(); }
};

/// Verdict on "ν_p(H) divides ν_p(G) for every H ≤ G". Full mode runs over
/// all subgroup classes; sampled mode over subgroups generated by one or
/// two seeded-random elements plus every point stabilizer.
DivSylReport divsyl_check(const PermGroup &G, unsigned p,
                          DivSylMode mode = DivSylMode::full());

} // namespace grp

#endif

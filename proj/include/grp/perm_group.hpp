#ifndef GRP_PERM_GROUP_HPP
#define GRP_PERM_GROUP_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "grp/perm.hpp"

namespace grp {

/// A permutation group given by generators, with a base and strong
/// generating set computed at construction time.
///
/// The construction is deterministic: base points are the smallest moved
/// points in ascending order, orbits are explored in ascending point order
/// and generators are applied in the order given. Identical generator
/// sequences always produce identical bases and transversals.
///
/// Immutable after construction.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> generators);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const { return degree_; }

  // nontrivial input generators, in input order
  const std::vector<Perm> &generators() const { return gens_; }

  std::uint64_t order() const { return order_; }

  bool is_trivial() const { return order_ == 1; }

  const std::vector<Point> &base() const { return base_; }

  // membership by sifting through the stabilizer chain
  bool contains(const Perm &p) const;

  // all group elements in a deterministic order; throws if order() > max
  std::vector<Perm> elements(std::uint64_t max = UINT64_MAX) const;

  // true iff both groups have the same element set
  bool same_group_as(const PermGroup &other) const;

  // true iff every generator lies in G (degrees must match)
  bool is_subgroup_of(const PermGroup &G) const;

  bool is_abelian() const;

private:
  PermGroup() = default;

  struct Level {
    Point base_point;
    std::vector<Perm> gens; // strong generators active at this level
    std::vector<int> orbit; // orbit of base_point, in discovery order
    std::vector<Perm> transversal; // indexed by point; valid where in_orbit
    std::vector<bool> in_orbit;
  };

  void build_chain(const std::vector<Perm> &strong);
  void recompute_level(std::size_t l, const std::vector<Perm> &strong);
  // returns (residue, level reached); residue trivial means full sift
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  unsigned degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Seeded product-replacement random element source. The mixing count is
/// fixed at 50 rounds so identical seeds give identical streams.
class RandomElements {
public:
  RandomElements(const PermGroup &G, std::uint64_t seed);

  Perm next();

private:
  std::vector<Perm> state_;
  std::mt19937_64 rng_;
};

} // namespace grp

#endif

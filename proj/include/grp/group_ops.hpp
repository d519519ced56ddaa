#ifndef GRP_GROUP_OPS_HPP
#define GRP_GROUP_OPS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "grp/perm.hpp"
#include "grp/perm_group.hpp"

namespace grp {

// Largest group order accepted by the element-scan operations (normalizer,
// centralizer, intersection, Sylow construction). Larger inputs are
// rejected, not silently slow.
inline constexpr std::uint64_t kElementScanBound = 200000;

// Largest index accepted by the coset action in quotient_group.
inline constexpr std::uint64_t kCosetBound = 100000;

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string &what) : std::runtime_error(what) {}
};

/// A homomorphism with a concrete evaluator. `image` is the full image of
/// `source`; `map` must be defined on every element of `source`.
struct Homomorphism {
  PermGroup source;
  PermGroup image;
  unsigned target_degree;
  std::function<Perm(const Perm &)> map;
};

// byte-string key identifying an element set (sorted internally); two
// subgroups of a common parent get equal keys iff they are equal
std::string element_set_key(std::vector<Perm> elems);

// N_G(H) = {g in G : H^g = H}, by element scan; requires H <= G
PermGroup normalizer(const PermGroup &G, const PermGroup &H);

// C_G(H), by element scan
PermGroup centralizer(const PermGroup &G, const PermGroup &H);

// G ∩ H for groups on the same points, by scanning the smaller group
PermGroup intersection(const PermGroup &G, const PermGroup &H);

// smallest subgroup containing `keep`-elements of G; scans all of G
PermGroup subgroup_where(const PermGroup &G,
                         const std::function<bool(const Perm &)> &keep);

// smallest normal subgroup of G containing the seeds; seeds must lie in G
PermGroup normal_closure(const PermGroup &G, const std::vector<Perm> &seeds);

// ⟨commutators of G⟩ as a normal subgroup of G
PermGroup derived_subgroup(const PermGroup &G);

bool is_normal_in(const PermGroup &N, const PermGroup &G);

bool is_solvable(const PermGroup &G);

bool is_perfect(const PermGroup &G);

// stabilizer of a point (0-based), by element scan
PermGroup point_stabilizer(const PermGroup &G, Point p);

// one representative per conjugacy class, deterministic (lexicographically
// least class member, classes ordered by that representative)
std::vector<Perm> conjugacy_class_reps(const PermGroup &G);

// no proper nontrivial normal subgroup: every nontrivial class closure is G
bool is_simple(const PermGroup &G);

// kernel of a homomorphism, by scanning source (bound-checked)
PermGroup kernel(const Homomorphism &phi);

// right-coset action of G on cosets of a normal subgroup N; returns the
// quotient as a permutation group of degree |G:N| plus the projection
std::pair<PermGroup, Homomorphism> quotient_group(const PermGroup &G,
                                                  const PermGroup &N);

/// A × B acting on the disjoint union of the two point sets.
struct DirectProduct {
  PermGroup group;
  unsigned degree_a;
  unsigned degree_b;

  Perm embed_a(const Perm &a) const;
  Perm embed_b(const Perm &b) const;
  Perm project_a(const Perm &g) const;
  Perm project_b(const Perm &g) const;
};

DirectProduct direct_product(const PermGroup &A, const PermGroup &B);

/// L ≀ K for K ≤ Sym(k), acting on k·deg(L) points: block i (0-based)
/// holds points i·d .. i·d+d-1, and (g_1,...,g_k)σ maps (i,x) to (iσ, x^{g_i}).
/// Coordinates are permuted by σ: (g_1,...,g_k) ↦ (g_{1σ^{-1}},...,g_{kσ^{-1}}),
/// so every element decomposes as g = (g_1,...,g_k)·rho(g).
struct WreathProduct {
  PermGroup group;
  unsigned block_count;  // k
  unsigned inner_degree; // deg(L)

  // top component rho(g) as a permutation of the k blocks
  Perm rho(const Perm &g) const;
  // base coordinate pi_i(g), 0-based block index
  Perm pi(unsigned i, const Perm &g) const;
  // assemble (coords)·sigma back into a degree k·d permutation
  Perm assemble(const std::vector<Perm> &coords, const Perm &sigma) const;
};

WreathProduct wreath_product(const PermGroup &L, const PermGroup &K);

} // namespace grp

#endif

#ifndef GRP_REDUCTION_HPP
#define GRP_REDUCTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grp/constructors.hpp"
#include "grp/group_ops.hpp"
#include "grp/lattice.hpp"
#include "grp/perm_group.hpp"
#include "grp/series.hpp"

namespace grp {

/// Faithful action of G on a union of its orbits, greedily chosen smallest
/// first; points are renumbered 0..degree-1 in ascending old-point order.
struct FaithfulRestriction {
  std::vector<Point> points; // selected old points, ascending
  std::vector<unsigned> index_of_old; // old point -> new index (or npos)
  unsigned degree;

  Perm restrict(const Perm &g) const;
  PermGroup restrict_group(const PermGroup &G) const;
};

FaithfulRestriction faithful_orbit_restriction(const PermGroup &G);

/// Socle structure of a group with a unique nonabelian minimal normal
/// subgroup T = S_1 × … × S_k.
struct SocleAnalysis {
  bool applicable = false;
  std::string reason;
  PermGroup group = PermGroup::trivial(1);
  PermGroup socle = PermGroup::trivial(1); // T
  std::vector<PermGroup> factors;          // S_1..S_k
  PermGroup rho_image = PermGroup::trivial(1); // action on the factors
  Homomorphism rho{PermGroup::trivial(1), PermGroup::trivial(1), 1, {}};
  std::vector<PermGroup> induced; // L_i = Aut_G(S_i) on the S_i points
};

SocleAnalysis socle_analysis(const PermGroup &G);

// the automorphism group induced on S by conjugation by N (which must
// normalize S), realized faithfully on the |S| element-points of S
PermGroup conjugation_aut_image(const PermGroup &N, const PermGroup &S);

/// The embedding φ: G -> Aut_G(S_1) ≀ ρ(G), built from right-coset
/// representatives r_1..r_k of N_G(S_1) chosen inside H, with cocycle
/// n_i(g) = r_i g r_{iρ(g)}^{-1}.
struct WreathEmbedding {
  bool applicable = false;
  std::string reason;
  SocleAnalysis socle;
  PermGroup subgroup_h = PermGroup::trivial(1); // where the reps come from
  std::vector<Perm> reps; // r_1..r_k, r_1 = identity
  WreathProduct target{PermGroup::trivial(1), 1, 1}; // Aut_G(S_1) ≀ ρ(G)
  Homomorphism phi{PermGroup::trivial(1), PermGroup::trivial(1), 1, {}};
  PermGroup image = PermGroup::trivial(1); // phi(G)
  // n_i(g), as an element of N_G(S_1)
  std::function<Perm(unsigned, const Perm &)> cocycle;
};

WreathEmbedding wreath_embed(const PermGroup &G, const PermGroup &H);

/// Both sides of ν_p(G) = |S|_{p'}^{k-1} · ν_p(L) for G ≤ L ≀ K, after
/// verifying the lemma's hypotheses (a)-(d).
struct NumpwreathVerdict {
  bool applicable = false;
  std::string reason; // failed precondition or hypothesis clause
  std::uint64_t formula_value = 0;
  std::uint64_t direct_value = 0;
  bool equal = false;
};

NumpwreathVerdict numpwreath_check(const WreathProduct &w, const PermGroup &L,
                                   const PermGroup &S, const PermGroup &K,
                                   const PermGroup &G, unsigned p);

/// Divisibility ν_p(H) | ν_p(G) for H whose intersection with the normal
/// product T = factor^k projects onto the factor or trivially in each
/// coordinate, plus the product formula when HT = G and H ∩ T decomposes.
struct SubdirectVerdict {
  bool applicable = false;
  std::string reason;
  std::uint64_t nu_H = 0;
  std::uint64_t nu_G = 0;
  bool divides = false;
  std::vector<std::uint64_t> projection_orders; // |H_i|
  bool equal_projections = false;               // |H_1| = … = |H_k| (HT = G)
  bool product_formula_checked = false; // HT=G and H∩T = H_1×…×H_k
  std::uint64_t formula_lhs = 0;        // ν_p(H)
  std::uint64_t formula_rhs = 0;        // ν_p(Aut_H(S_1))·|H_1|_{p'}^{k-1}
  bool formula_equal = false;
};

SubdirectVerdict subdirect_check(const WreathProduct &w,
                                 const PermGroup &factor, const PermGroup &G,
                                 const PermGroup &H, unsigned p);

/// The main reduction theorem as an implication: if for every nonabelian
/// rc-section and every class of p-subgroups P of Aut_G(section) the group
/// ⟨P, inner section⟩ satisfies DivSyl(p), then G satisfies DivSyl(p).
struct MainTheoremRecord {
  unsigned prime;
  bool hypothesis;
  bool conclusion;
  std::vector<std::string> section_notes;

  bool implication_ok() const { return !hypothesis || conclusion; }
};

MainTheoremRecord main_theorem_check(const PermGroup &G, unsigned p);

/// §3 Proposition probe: S ⊴ A almost simple with p ∤ |S| implies
/// DivSyl(p); checked in full mode within the lattice bound, sampled
/// beyond it.
struct PropositionVerdict {
  bool applicable = false;
  std::string reason;
  bool sampled = false;
  std::uint64_t nu_p = 0;
  std::vector<DivSylReport> reports; // one (full) or per-seed (sampled)

  bool satisfied() const;
};

PropositionVerdict proposition_check(const PermGroup &A, const PermGroup &S,
                                     unsigned p,
                                     std::vector<std::uint64_t> seeds = {0, 1},
                                     unsigned count = 64);

/// Conjecture probe: every L with S ≤ L ≤ Aut(S) satisfies DivSyl(p).
/// L runs over preimages of subgroups of the outer quotient; the verdicts
/// are reported, never assumed.
struct ConjectureEntry {
  std::uint64_t order;
  std::uint64_t index_over_socle;
  std::uint64_t nu_p;
  bool sampled;
  bool satisfies;
};

struct ConjectureReport {
  bool premise_holds = false; // divsyl_check(S, p) passes
  std::string reason;
  std::vector<ConjectureEntry> entries;

  bool all_satisfy() const;
};

ConjectureReport conjecture_scan(const FamilyGroup &S, unsigned p);

} // namespace grp

#endif

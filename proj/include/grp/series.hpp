#ifndef GRP_SERIES_HPP
#define GRP_SERIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "grp/group_ops.hpp"
#include "grp/perm_group.hpp"

namespace grp {

/// A section A/B with B normal in A.
struct Section {
  PermGroup upper; // A
  PermGroup lower; // B

  std::uint64_t order() const { return upper.order() / lower.order(); }
};

/// Concrete permutation realization of a section quotient A/B. When B is
/// trivial the section is A itself on its original points; otherwise the
/// right-coset action of A on the |A:B| cosets of B.
struct SectionQuotient {
  PermGroup quotient;
  Homomorphism projection; // A -> quotient
};

SectionQuotient section_quotient(const Section &sec);

enum class SeriesKind { Chief, Composition, RC };

/// An ascending subgroup series from the trivial group to the full group,
/// with each term normal in its successor.
struct SectionSeries {
  PermGroup group;
  SeriesKind kind;
  std::vector<PermGroup> chain;      // ascending; front trivial, back = group
  std::vector<bool> normal_in_group; // per chain term

  std::size_t section_count() const { return chain.size() - 1; }
  Section section(std::size_t i) const {
    return Section{chain[i + 1], chain[i]};
  }
  std::uint64_t section_order(std::size_t i) const {
    return chain[i + 1].order() / chain[i].order();
  }
};

// all minimal normal subgroups, ordered by (order, element-set key);
// minimality of each result is re-verified by scanning element closures
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &G);

// a maximal (proper) normal subgroup of G, grown by joining single-element
// normal closures; deterministic (largest order, then least key)
PermGroup maximal_normal_subgroup(const PermGroup &G);

SectionSeries chief_series(const PermGroup &G);
SectionSeries composition_series(const PermGroup &G);

// composition series refining the chief series: every chief term appears
// in the chain and every section is simple
SectionSeries rc_series(const PermGroup &G);

/// Aut_G(A/B) = N_G(A/B)/C_G(A/B) realized faithfully on the coset points
/// of the section, together with the image of A itself.
struct InducedAutGroup {
  Section section;
  PermGroup normalizer;  // N_G(A/B) = N_G(A) ∩ N_G(B)
  PermGroup kernel;      // C_G(A/B)
  PermGroup image;       // the induced automorphism group
  PermGroup inner_image; // image of A (the inner automorphisms)
  Homomorphism action;   // N_G(A/B) -> image, x: Ba -> B x^{-1}ax
};

InducedAutGroup induced_aut(const PermGroup &G, const Section &sec);

/// Result of matching the sections of two series by isomorphism-type
/// fingerprint (order, abelian flag, element-order histogram) with
/// divisibility (or, for rc vs rc, equality) of |Aut_G(section)|.
struct SeriesComparison {
  bool matched;
  std::vector<std::size_t> sigma; // s1 section i pairs with s2 section sigma[i]
  std::vector<std::uint64_t> aut_orders_1;
  std::vector<std::uint64_t> aut_orders_2;
  std::string detail; // counterexample description when not matched
};

SeriesComparison compare_series(const PermGroup &G, const SectionSeries &s1,
                                const SectionSeries &s2);

/// Verdict for the normalizer lemma on a series 1 ⊴ H ⊴ K ⊴ G with H a
/// p-group, K/H a p'-group and G/K a p-group: for a p-subgroup Q ⊇ H and
/// a Sylow p-subgroup P ⊇ Q, N_K(P) ≤ N_K(Q) and the image of N_K(Q) in
/// G/H is C_{K/H}(Q/H).
struct Lemma6Verdict {
  bool applicable;
  std::string reason; // why not applicable, when it is not
  bool normalizer_containment = false;
  bool image_identity = false;

  bool passed() const {
    return applicable && normalizer_containment && image_identity;
  }
};

Lemma6Verdict lemma6_check(const PermGroup &G, const PermGroup &H,
                           const PermGroup &K, const PermGroup &Q, unsigned p);

// largest normal solvable subgroup
PermGroup solvable_radical(const PermGroup &G);

} // namespace grp

#endif

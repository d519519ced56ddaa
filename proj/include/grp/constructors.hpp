#ifndef GRP_CONSTRUCTORS_HPP
#define GRP_CONSTRUCTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "grp/perm_group.hpp"

namespace grp {

/// GF(p^t) for p^t <= 64. Elements are encoded as 0..q-1, the base-p digit
/// string of the residue polynomial. Extensions use a fixed table of Conway
/// polynomials, so generator sequences are bit-exact across builds; the
/// residue class of x (encoding p) is a primitive element.
class FiniteField {
public:
  FiniteField(unsigned p, unsigned t);

  static std::optional<std::pair<unsigned, unsigned>> factor_prime_power(unsigned q);
  static FiniteField of_order(unsigned q);

  unsigned size() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return t_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const; // throws on 0
  unsigned pow(unsigned a, unsigned long long e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }

  // a primitive element: x itself for extensions, the smallest primitive
  // root for prime fields
  unsigned generator() const { return gen_; }

private:
  unsigned p_, t_, q_;
  unsigned gen_;
  std::vector<unsigned> add_, mul_, neg_;
};

enum class Family { Sym, Alt, Cyclic, Dihedral, SL2, PSL2, PGL2, PGammaL2 };

struct GroupFamilySpec {
  Family family;
  unsigned parameter; // n, or the prime power q for the linear families

  std::string name() const;
  static std::optional<GroupFamilySpec> parse(const std::string &text);
};

/// A constructed family member; keeps its spec so automorphism overgroups
/// can be attached later.
struct FamilyGroup {
  GroupFamilySpec spec;
  PermGroup group;
};

// deterministic constructor for all families; throws on invalid parameters
FamilyGroup make_group(const GroupFamilySpec &spec);

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned n); // order 2n on n points, n >= 3

// an overgroup realizing Aut(S) on the same points: sym(n) for alt(n), n != 6;
// pgammal2(q) for psl2(q). alt(6) and other families are rejected.
FamilyGroup aut_overgroup(const FamilyGroup &S);

} // namespace grp

#endif

#ifndef GRP_SYLOW_HPP
#define GRP_SYLOW_HPP

#include <cstdint>

#include "grp/group_ops.hpp"
#include "grp/perm_group.hpp"

namespace grp {

// Sylow conjugation orbits larger than this abort with BoundExceeded.
inline constexpr std::uint64_t kSylowOrbitBound = 1000000;

struct PPartition {
  std::uint64_t n;
  unsigned p;
  std::uint64_t p_part;       // n_p
  std::uint64_t p_prime_part; // n_{p'}
};

// splits n = n_p · n_{p'}; throws unless p is prime and n >= 1
PPartition p_partition(std::uint64_t n, unsigned p);

bool is_prime(unsigned p);

struct SylowCertificate {
  unsigned p;
  PermGroup sylow;
  std::uint64_t nu_p;
  std::uint64_t normalizer_order; // |G| / nu_p
};

// p-th power map helper
Perm perm_power(const Perm &g, std::uint64_t e);

// a Sylow p-subgroup, grown by locating p-elements of N_G(P)\P; the seed
// only picks the starting p-element, the result order is always |G|_p
PermGroup sylow_subgroup(const PermGroup &G, unsigned p,
                         std::uint64_t seed = 0);

// a Sylow p-subgroup of G containing the p-subgroup Q
PermGroup sylow_subgroup_containing(const PermGroup &G, const PermGroup &Q,
                                    unsigned p);

// ν_p(G) as the size of the conjugation orbit of one Sylow p-subgroup
SylowCertificate count_sylow(const PermGroup &G, unsigned p,
                             std::uint64_t seed = 0);

// O_p(G): intersection of all conjugates of a Sylow p-subgroup
PermGroup p_core(const PermGroup &G, unsigned p);

// O_{p'}(G): largest normal p'-subgroup, grown through normal closures
PermGroup p_prime_core(const PermGroup &G, unsigned p);

// true iff every chief factor is a p-group or a p'-group
bool is_p_solvable(const PermGroup &G, unsigned p);

/// Both sides of ν_p(G) = ν_p(G/A)·ν_p(PA) and ν_p(PA) = |A:N_A(P)|,
/// computed independently.
struct NuFactorization {
  std::uint64_t nu_G;
  std::uint64_t nu_quotient;  // ν_p(G/A)
  std::uint64_t nu_PA;        // ν_p(PA)
  std::uint64_t index_A_NA_P; // |A : N_A(P)|
  bool factorization_holds;   // nu_G == nu_quotient * nu_PA
  bool index_identity_holds;  // nu_PA == index_A_NA_P

  bool ok() const { return factorization_holds && index_identity_holds; }
};

// requires A normal in G
NuFactorization check_nu_factorization(const PermGroup &G, const PermGroup &A,
                                       unsigned p);

} // namespace grp

#endif

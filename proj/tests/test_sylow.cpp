#include "doctest.h"

#include <map>
#include <set>

#include "grp/constructors.hpp"
#include "grp/sylow.hpp"
#include "test_util.hpp"

using namespace grp;

namespace {

// independent Sylow count: enumerate subgroups of order |G|_p directly as
// closures of at most two p-elements (enough whenever |G|_p <= p^2)
std::uint64_t brute_sylow_count(const PermGroup &G, unsigned p) {
  std::uint64_t target = p_partition(G.order(), p).p_part;
  REQUIRE(target <= static_cast<std::uint64_t>(p) * p);
  std::vector<Perm> pelems;
  for (const Perm &g : G.elements()) {
    auto split = p_partition(g.order(), p);
    if (split.p_part == g.order() && !g.is_identity())
      pelems.push_back(g);
  }
  std::set<std::set<Perm>> found;
  for (const Perm &a : pelems)
    for (const Perm &b : pelems) {
      auto elems = testutil::closure(G.degree(), {a, b});
      if (elems.size() == target)
        found.insert(std::set<Perm>(elems.begin(), elems.end()));
    }
  return found.size();
}

} // namespace

TEST_CASE("p-partitions") {
  auto s = p_partition(60, 2);
  CHECK(s.p_part == 4);
  CHECK(s.p_prime_part == 15);
  s = p_partition(504, 3);
  CHECK(s.p_part == 9);
  CHECK(s.p_prime_part == 56);
  s = p_partition(7, 7);
  CHECK(s.p_part == 7);
  CHECK(s.p_prime_part == 1);
  s = p_partition(10, 3);
  CHECK(s.p_part == 1);
  CHECK(s.p_prime_part == 10);
  CHECK_THROWS_AS(p_partition(12, 4), std::invalid_argument);
  CHECK_THROWS_AS(p_partition(0, 2), std::invalid_argument);
}

TEST_CASE("perm powers") {
  Perm c = testutil::cyc(6, {{1, 2, 3, 4, 5, 6}});
  CHECK(perm_power(c, 0).is_identity());
  CHECK(perm_power(c, 6).is_identity());
  CHECK(perm_power(c, 3) == c * c * c);
  CHECK(perm_power(c, 7) == c);
}

TEST_CASE("sylow subgroups have the right order and shape") {
  PermGroup a5 = alternating_group(5);
  PermGroup P = sylow_subgroup(a5, 2);
  CHECK(P.order() == 4);
  CHECK(P.is_subgroup_of(a5));
  CHECK(P.is_abelian()); // the Sylow 2-subgroup of alt(5) is Klein four
  for (const Perm &g : P.elements())
    CHECK(g.order() <= 2);

  CHECK(sylow_subgroup(a5, 3).order() == 3);
  CHECK(sylow_subgroup(a5, 5).order() == 5);
  CHECK(sylow_subgroup(a5, 7).is_trivial());

  CHECK(sylow_subgroup(symmetric_group(4), 2).order() == 8);
  CHECK(sylow_subgroup(symmetric_group(6), 2).order() == 16);
  CHECK(sylow_subgroup(symmetric_group(6), 3).order() == 9);
  CHECK(sylow_subgroup(make_group({Family::PSL2, 8}).group, 2).order() == 8);
}

TEST_CASE("sylow order is independent of the seed") {
  PermGroup s5 = symmetric_group(5);
  for (std::uint64_t seed : {0u, 1u, 2u, 17u}) {
    PermGroup P = sylow_subgroup(s5, 2, seed);
    CHECK(P.order() == 8);
    CHECK(P.is_subgroup_of(s5));
  }
}

TEST_CASE("sylow subgroup containing a given p-subgroup") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4(4, {testutil::cyc(4, {{1, 2}, {3, 4}}),
                   testutil::cyc(4, {{1, 3}, {2, 4}})});
  PermGroup P = sylow_subgroup_containing(s4, v4, 2);
  CHECK(P.order() == 8);
  CHECK(v4.is_subgroup_of(P));

  PermGroup c3(4, {testutil::cyc(4, {{1, 2, 3}})});
  CHECK_THROWS_AS(sylow_subgroup_containing(s4, c3, 2),
                  std::invalid_argument);
}

TEST_CASE("sylow counts match the brute-force census") {
  PermGroup a5 = alternating_group(5);
  CHECK(count_sylow(a5, 3).nu_p == 10);
  CHECK(count_sylow(a5, 3).nu_p == brute_sylow_count(a5, 3));
  CHECK(count_sylow(a5, 5).nu_p == 6);
  CHECK(count_sylow(a5, 5).nu_p == brute_sylow_count(a5, 5));
  CHECK(count_sylow(a5, 2).nu_p == 5);
  CHECK(count_sylow(a5, 2).nu_p == brute_sylow_count(a5, 2));

  PermGroup a4 = alternating_group(4);
  CHECK(count_sylow(a4, 3).nu_p == 4);
  CHECK(count_sylow(a4, 3).nu_p == brute_sylow_count(a4, 3));
  CHECK(count_sylow(a4, 2).nu_p == 1);

  PermGroup s4 = symmetric_group(4);
  CHECK(count_sylow(s4, 2).nu_p == 3);
  CHECK(count_sylow(s4, 3).nu_p == brute_sylow_count(s4, 3));
}

TEST_CASE("sylow certificates satisfy the classical congruences") {
  std::vector<PermGroup> groups{
      symmetric_group(5),         alternating_group(6),
      dihedral_group(12),         make_group({Family::PSL2, 7}).group,
      make_group({Family::SL2, 3}).group,
      make_group({Family::PGammaL2, 8}).group};
  for (const PermGroup &G : groups)
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      CAPTURE(G.order());
      CAPTURE(p);
      auto split = p_partition(G.order(), p);
      SylowCertificate cert = count_sylow(G, p);
      CHECK(cert.sylow.order() == split.p_part);
      CHECK(cert.nu_p % p == 1);
      CHECK(split.p_prime_part % cert.nu_p == 0);
      CHECK(cert.nu_p * cert.normalizer_order == G.order());
    }
}

TEST_CASE("p-cores") {
  PermGroup s4 = symmetric_group(4);
  PermGroup o2 = p_core(s4, 2);
  CHECK(o2.order() == 4); // the Klein four group
  CHECK(is_normal_in(o2, s4));
  for (const Perm &g : o2.elements())
    CHECK(g.order() <= 2);
  CHECK(p_core(s4, 3).is_trivial());

  CHECK(p_core(alternating_group(4), 2).order() == 4);
  CHECK(p_core(alternating_group(5), 2).is_trivial());
  CHECK(p_core(alternating_group(5), 3).is_trivial());
  CHECK(p_core(symmetric_group(3), 3).order() == 3);
  CHECK(p_core(dihedral_group(8), 2).order() == 16);
}

TEST_CASE("p-prime cores") {
  CHECK(p_prime_core(symmetric_group(4), 3).order() == 4);
  CHECK(p_prime_core(symmetric_group(3), 2).order() == 3);
  CHECK(p_prime_core(symmetric_group(4), 2).is_trivial());
  CHECK(p_prime_core(alternating_group(5), 2).is_trivial());
  CHECK(p_prime_core(alternating_group(5), 7).order() == 60);
  PermGroup opp = p_prime_core(dihedral_group(15), 2);
  CHECK(opp.order() == 15);
  CHECK(is_normal_in(opp, dihedral_group(15)));
}

TEST_CASE("p-solvability") {
  for (unsigned p : {2u, 3u}) {
    CHECK(is_p_solvable(symmetric_group(4), p));
    CHECK(is_p_solvable(dihedral_group(12), p));
    CHECK_FALSE(is_p_solvable(alternating_group(5), p));
  }
  CHECK_FALSE(is_p_solvable(alternating_group(5), 5));
  // a simple nonabelian chief factor only obstructs p-solvability when p
  // divides its order
  CHECK(is_p_solvable(alternating_group(5), 7));
  CHECK_FALSE(is_p_solvable(symmetric_group(5), 2));
  CHECK(is_p_solvable(make_group({Family::SL2, 3}).group, 2));
  CHECK(is_p_solvable(cyclic_group(12), 2));
}

TEST_CASE("nu factorization over a normal subgroup") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4(4, {testutil::cyc(4, {{1, 2}, {3, 4}}),
                   testutil::cyc(4, {{1, 3}, {2, 4}})});
  NuFactorization f = check_nu_factorization(s4, v4, 2);
  CHECK(f.nu_G == 3);
  CHECK(f.nu_quotient == 3);
  CHECK(f.nu_PA == 1);
  CHECK(f.index_A_NA_P == 1);
  CHECK(f.ok());

  PermGroup a4 = alternating_group(4);
  f = check_nu_factorization(s4, a4, 2);
  CHECK(f.nu_G == 3);
  CHECK(f.nu_quotient == 1);
  CHECK(f.nu_PA == 3);
  CHECK(f.ok());

  f = check_nu_factorization(s4, a4, 3);
  CHECK(f.nu_G == 4);
  CHECK(f.nu_quotient == 1);
  CHECK(f.nu_PA == 4);
  CHECK(f.ok());

  // the factorization holds for every (group, normal subgroup, prime) here
  PermGroup s3 = symmetric_group(3);
  PermGroup c3(3, {testutil::cyc(3, {{1, 2, 3}})});
  for (unsigned p : {2u, 3u})
    CHECK(check_nu_factorization(s3, c3, p).ok());
}

TEST_CASE("nu factorization rejects non-normal subgroups") {
  PermGroup s4 = symmetric_group(4);
  PermGroup d8 = sylow_subgroup(s4, 2);
  CHECK_THROWS_AS(check_nu_factorization(s4, d8, 2), std::invalid_argument);
}

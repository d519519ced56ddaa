#include "grp/sylow.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace grp {

namespace {

std::vector<Perm> conjugate_all(const std::vector<Perm> &elems, const Perm &g) {
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (const Perm &e : elems)
    out.push_back(conjugate(e, g));
  return out;
}

// grow the p-subgroup P to full Sylow order inside G: as long as
// |P| < |G|_p the quotient N_G(P)/P has order divisible by p, so some
// element of the normalizer has a p-part outside P
PermGroup grow_to_sylow(const PermGroup &G, PermGroup P, unsigned p,
                        std::uint64_t target) {
  while (P.order() < target) {
    PermGroup N = normalizer(G, P);
    bool grew = false;
    for (const Perm &x : N.elements()) {
      PPartition split = p_partition(x.order(), p);
      if (split.p_part == 1)
        continue;
      Perm xp = perm_power(x, split.p_prime_part);
      if (P.contains(xp))
        continue;
      std::vector<Perm> gens = P.generators();
      gens.push_back(xp);
      P = PermGroup(G.degree(), gens);
      grew = true;
      break;
    }
    if (!grew)
      throw std::logic_error("grow_to_sylow: stalled below Sylow order");
  }
  return P;
}

} // namespace

bool is_prime(unsigned p) {
  if (p < 2)
    return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

PPartition p_partition(std::uint64_t n, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("p_partition: " + std::to_string(p) +
                                " is not prime");
  if (n == 0)
    throw std::invalid_argument("p_partition: n must be positive");
  PPartition out{n, p, 1, n};
  while (out.p_prime_part % p == 0) {
    out.p_prime_part /= p;
    out.p_part *= p;
  }
  return out;
}

Perm perm_power(const Perm &g, std::uint64_t e) {
  Perm acc(g.degree());
  Perm sq = g;
  for (; e; e >>= 1) {
    if (e & 1)
      acc = acc * sq;
    sq = sq * sq;
  }
  return acc;
}

PermGroup sylow_subgroup(const PermGroup &G, unsigned p, std::uint64_t seed) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded("sylow_subgroup: group too large for element scan");
  std::uint64_t target = p_partition(G.order(), p).p_part;
  if (target == 1)
    return PermGroup::trivial(G.degree());

  // seeded starting p-element; by Cauchy's theorem one exists, and the
  // proportion of elements with order divisible by p is at least 1/|G|_p'
  RandomElements rnd(G, seed);
  Perm start(G.degree());
  for (int tries = 0; tries < 4096 && start.is_identity(); ++tries) {
    Perm g = rnd.next();
    PPartition split = p_partition(g.order(), p);
    if (split.p_part > 1)
      start = perm_power(g, split.p_prime_part);
  }
  if (start.is_identity())
    for (const Perm &g : G.elements()) {
      PPartition split = p_partition(g.order(), p);
      if (split.p_part > 1) {
        start = perm_power(g, split.p_prime_part);
        break;
      }
    }

  return grow_to_sylow(G, PermGroup(G.degree(), {start}), p, target);
}

PermGroup sylow_subgroup_containing(const PermGroup &G, const PermGroup &Q,
                                    unsigned p) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded(
        "sylow_subgroup_containing: group too large for element scan");
  std::uint64_t target = p_partition(G.order(), p).p_part;
  if (p_partition(Q.order(), p).p_prime_part != 1)
    throw std::invalid_argument(
        "sylow_subgroup_containing: Q is not a p-group");
  if (!Q.is_subgroup_of(G))
    throw std::invalid_argument("sylow_subgroup_containing: Q not in G");
  return grow_to_sylow(G, Q, p, target);
}

SylowCertificate count_sylow(const PermGroup &G, unsigned p,
                             std::uint64_t seed) {
  PermGroup P = sylow_subgroup(G, p, seed);
  if (P.is_trivial())
    return SylowCertificate{p, P, 1, G.order()};

  // conjugation orbit of P, subgroups identified by their element sets
  std::vector<std::vector<Perm>> frontier{P.elements()};
  std::map<std::string, bool> seen{{element_set_key(frontier[0]), true}};
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<Perm>> next;
    for (const auto &elems : frontier)
      for (const Perm &g : G.generators()) {
        std::vector<Perm> img = conjugate_all(elems, g);
        std::string key = element_set_key(img);
        if (seen.emplace(std::move(key), true).second) {
          if (++count > kSylowOrbitBound)
            throw BoundExceeded("count_sylow: orbit exceeds bound");
          next.push_back(std::move(img));
        }
      }
    frontier = std::move(next);
  }
  return SylowCertificate{p, P, count, G.order() / count};
}

PermGroup p_core(const PermGroup &G, unsigned p) {
  PermGroup P = sylow_subgroup(G, p);
  if (P.is_trivial())
    return P;

  // intersect the conjugation orbit of P; stop early once trivial
  std::vector<Perm> first = P.elements();
  std::sort(first.begin(), first.end());
  std::vector<Perm> common = first;

  std::vector<std::vector<Perm>> frontier{first};
  std::map<std::string, bool> seen{{element_set_key(first), true}};
  while (!frontier.empty() && common.size() > 1) {
    std::vector<std::vector<Perm>> next;
    for (const auto &elems : frontier) {
      for (const Perm &g : G.generators()) {
        std::vector<Perm> img = conjugate_all(elems, g);
        std::sort(img.begin(), img.end());
        if (!seen.emplace(element_set_key(img), true).second)
          continue;
        std::vector<Perm> inter;
        std::set_intersection(common.begin(), common.end(), img.begin(),
                              img.end(), std::back_inserter(inter));
        common = std::move(inter);
        next.push_back(std::move(img));
        if (common.size() == 1)
          break;
      }
      if (common.size() == 1)
        break;
    }
    frontier = std::move(next);
  }

  std::vector<Perm> gens;
  for (const Perm &e : common)
    if (!e.is_identity())
      gens.push_back(e);
  return PermGroup(G.degree(), gens);
}

PermGroup p_prime_core(const PermGroup &G, unsigned p) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded("p_prime_core: group too large for element scan");
  std::vector<Perm> elems = G.elements();

  PermGroup N = PermGroup::trivial(G.degree());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm &x : elems) {
      if (x.order() % p == 0 || N.contains(x))
        continue;
      std::vector<Perm> seeds = N.generators();
      seeds.push_back(x);
      PermGroup M = normal_closure(G, seeds);
      if (M.order() % p == 0)
        continue;
      N = M;
      changed = true;
    }
  }
  return N;
}

bool is_p_solvable(const PermGroup &G, unsigned p) {
  // peel O_p and O_{p'} off the top of the group; G is p-solvable iff the
  // recursion reaches the trivial group, i.e. every chief factor is a
  // p-group or a p'-group
  PermGroup cur = G;
  while (!cur.is_trivial()) {
    PermGroup op = p_core(cur, p);
    if (!op.is_trivial()) {
      cur = quotient_group(cur, op).first;
      continue;
    }
    PermGroup opp = p_prime_core(cur, p);
    if (opp.is_trivial())
      return false;
    cur = quotient_group(cur, opp).first;
  }
  return true;
}

NuFactorization check_nu_factorization(const PermGroup &G, const PermGroup &A,
                                       unsigned p) {
  if (!is_normal_in(A, G))
    throw std::invalid_argument("check_nu_factorization: A not normal in G");

  NuFactorization out{};
  out.nu_G = count_sylow(G, p).nu_p;
  out.nu_quotient = count_sylow(quotient_group(G, A).first, p).nu_p;

  PermGroup P = sylow_subgroup(G, p);
  std::vector<Perm> pa_gens = P.generators();
  for (const Perm &a : A.generators())
    pa_gens.push_back(a);
  PermGroup PA(G.degree(), pa_gens);
  out.nu_PA = count_sylow(PA, p).nu_p;

  PermGroup NA_P = subgroup_where(A, [&](const Perm &a) {
    for (const Perm &g : P.generators())
      if (!P.contains(conjugate(g, a)))
        return false;
    return true;
  });
  out.index_A_NA_P = A.order() / NA_P.order();

  out.factorization_holds = out.nu_G == out.nu_quotient * out.nu_PA;
  out.index_identity_holds = out.nu_PA == out.index_A_NA_P;
  return out;
}

} // namespace grp

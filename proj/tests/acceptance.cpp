// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every comparison is integer-exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grp/catalog.hpp"
#include "grp/constructors.hpp"
#include "grp/group_file.hpp"
#include "grp/group_ops.hpp"
#include "grp/lattice.hpp"
#include "grp/reduction.hpp"
#include "grp/series.hpp"
#include "grp/sylow.hpp"

using namespace grp;

namespace {

using Clock = std::chrono::steady_clock;

bool all_pass = true;

void report(int criterion, bool pass, const std::string &what,
            Clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                Clock::now() - start)
                .count();
  std::printf("criterion %d: %s  (%lld ms)  %s\n", criterion,
              pass ? "PASS" : "FAIL", static_cast<long long>(ms),
              what.c_str());
  std::fflush(stdout);
  all_pass = all_pass && pass;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(static_cast<unsigned>(n));
  return out;
}

// conjugacy partition of an explicit subgroup list, independent of the
// class-table machinery
std::vector<std::pair<std::uint64_t, std::uint64_t>>
partition_by_conjugacy(const PermGroup &G, const std::vector<PermGroup> &subs) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < subs.size(); ++i)
    index.emplace(element_set_key(subs[i].elements()), i);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::set<std::size_t> unseen;
  for (std::size_t i = 0; i < subs.size(); ++i)
    unseen.insert(i);
  while (!unseen.empty()) {
    std::size_t start = *unseen.begin();
    std::uint64_t size = 0;
    std::vector<std::size_t> frontier{start};
    unseen.erase(start);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t cur : frontier) {
        ++size;
        for (const Perm &g : G.generators()) {
          std::vector<Perm> img;
          for (const Perm &e : subs[cur].elements())
            img.push_back(conjugate(e, g));
          std::size_t j = index.at(element_set_key(img));
          if (unseen.erase(j))
            next.push_back(j);
        }
      }
      frontier = std::move(next);
    }
    out.emplace_back(subs[start].order(), size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------------

void criterion_1() {
  auto start = Clock::now();
  bool ok = count_sylow(alternating_group(5), 3).nu_p == 10 &&
            count_sylow(alternating_group(4), 3).nu_p == 4;

  std::string grp_file = "/tmp/grp-acceptance-a5.grp";
  {
    std::ofstream f(grp_file);
    f << render_group_file(
        GroupFile{"alt5", 5, alternating_group(5).generators()});
  }
  std::string out_file = "/tmp/grp-acceptance-a5.out";
  int status = std::system((std::string(GRP_CLI_PATH) + " divsyl -g " +
                            grp_file + " -p 3 > " + out_file + " 2>&1")
                               .c_str());
  ok = ok && WEXITSTATUS(status) == 1;
  std::ifstream in(out_file);
  std::string line;
  unsigned violations = 0;
  bool names_order_12 = false;
  while (std::getline(in, line))
    if (line.find("violation") != std::string::npos) {
      ++violations;
      names_order_12 = line.find("order 12") != std::string::npos;
    }
  ok = ok && violations == 1 && names_order_12;
  std::remove(grp_file.c_str());
  std::remove(out_file.c_str());
  report(1, ok, "nu_3(alt(5)) = 10, nu_3(alt(4)) = 4, cli exit 1 naming the "
                "order-12 class", start);
}

void criterion_2() {
  auto start = Clock::now();
  bool ok = true;
  unsigned checked = 0;
  for (const CatalogEntry &e : catalog(CatalogSweep::Small))
    for (unsigned p : prime_divisors(e.group.order())) {
      if (!is_p_solvable(e.group, p))
        continue;
      ++checked;
      if (!divsyl_check(e.group, p).satisfies())
        ok = false;
    }
  ok = ok && checked >= 30;
  report(2, ok, "p-solvable suite: " + std::to_string(checked) +
                    " (group, prime) pairs all satisfy", start);
}

void criterion_3() {
  auto start = Clock::now();
  bool ok = true;
  unsigned checked = 0;
  for (const CatalogEntry &e : catalog(CatalogSweep::Families)) {
    std::vector<PermGroup> normals = minimal_normal_subgroups(e.group);
    normals.push_back(derived_subgroup(e.group));
    for (const PermGroup &A : normals)
      for (unsigned p : prime_divisors(e.group.order())) {
        ++checked;
        if (!check_nu_factorization(e.group, A, p).ok())
          ok = false;
      }
  }
  report(3, ok, "nu factorization identity on " + std::to_string(checked) +
                    " (G, A, p) triples", start);
}

void criterion_4() {
  auto start4a = Clock::now();
  WreathProduct wa = wreath_product(alternating_group(5), symmetric_group(2));
  NumpwreathVerdict va =
      numpwreath_check(wa, alternating_group(5), alternating_group(5),
                       symmetric_group(2), wa.group, 2);
  bool ok = va.applicable && va.formula_value == 75 && va.direct_value == 75;

  WreathProduct ws = wreath_product(symmetric_group(5), symmetric_group(2));
  NumpwreathVerdict vs =
      numpwreath_check(ws, symmetric_group(5), alternating_group(5),
                       symmetric_group(2), ws.group, 2);
  std::uint64_t nu2_s5 = count_sylow(symmetric_group(5), 2).nu_p;
  ok = ok && vs.applicable && vs.formula_value == 15 * nu2_s5 && vs.equal;
  report(4, ok, "nu_2(alt(5) wr C2) = 75 = 15*5 and nu_2(sym(5) wr C2) = "
                "15*nu_2(sym(5)), formula vs orbit count", start4a);
}

void criterion_5() {
  auto start = Clock::now();
  bool ok = true;
  std::vector<PermGroup> groups{
      wreath_product(alternating_group(5), symmetric_group(2)).group,
      symmetric_group(5), alternating_group(5)};
  for (const PermGroup &G : groups) {
    WreathEmbedding emb = wreath_embed(G, G);
    if (!emb.applicable) {
      ok = false;
      continue;
    }
    ok = ok && emb.image.order() == G.order();
    for (const Perm &g : G.generators()) {
      Perm sigma = emb.socle.rho.map(g);
      for (unsigned i = 0; i < emb.reps.size(); ++i)
        ok = ok && emb.reps[i] * g == emb.cocycle(i, g) * emb.reps[sigma[i]];
    }
    // phi(T) = S, subgroup-wise
    std::vector<Perm> mapped;
    for (const Perm &s : emb.socle.socle.generators())
      mapped.push_back(emb.phi.map(s));
    const PermGroup &S1 = emb.socle.factors[0];
    PermGroup inn = conjugation_aut_image(S1, S1);
    std::vector<Perm> bold_s;
    for (unsigned i = 0; i < emb.target.block_count; ++i)
      for (const Perm &a : inn.generators()) {
        std::vector<Perm> coords(emb.target.block_count,
                                 Perm(emb.target.inner_degree));
        coords[i] = a;
        bold_s.push_back(
            emb.target.assemble(coords, Perm(emb.target.block_count)));
      }
    ok = ok &&
         PermGroup(emb.target.group.degree(), mapped)
             .same_group_as(PermGroup(emb.target.group.degree(), bold_s));
  }
  report(5, ok, "wreath embedding relations, injectivity and phi(T) = S on "
                "alt(5) wr C2, sym(5), alt(5)", start);
}

void criterion_6() {
  auto start = Clock::now();
  bool ok = true;
  unsigned rows = 0;
  for (const CatalogEntry &e : catalog(CatalogSweep::Families)) {
    if (e.group.order() > 10000)
      continue;
    for (unsigned p : prime_divisors(e.group.order())) {
      ++rows;
      if (!main_theorem_check(e.group, p).implication_ok())
        ok = false;
    }
  }
  MainTheoremRecord r1 = main_theorem_check(alternating_group(5), 5);
  MainTheoremRecord r2 = main_theorem_check(alternating_group(5), 3);
  MainTheoremRecord r3 = main_theorem_check(symmetric_group(4), 2);
  ok = ok && r1.hypothesis && r1.conclusion;
  ok = ok && !r2.hypothesis && !r2.conclusion;
  ok = ok && r3.hypothesis && r3.conclusion;
  report(6, ok, "main theorem implication on " + std::to_string(rows) +
                    " (G, p) rows, example rows (T,T)/(F,F)/(T,T)", start);
}

void criterion_7() {
  auto start = Clock::now();
  bool ok = true;
  unsigned groups = 0;
  for (const CatalogEntry &e : catalog(CatalogSweep::Small)) {
    if (e.group.order() > 1000)
      continue;
    ++groups;
    std::vector<PermGroup> subs = brute_subgroups(e.group);
    auto oracle = partition_by_conjugacy(e.group, subs);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> table;
    for (const SubgroupClass &c : subgroup_classes(e.group).classes)
      table.emplace_back(c.representative.order(), c.class_size);
    std::sort(table.begin(), table.end());
    ok = ok && oracle == table;

    for (unsigned p : prime_divisors(e.group.order())) {
      std::uint64_t p_part = p_partition(e.group.order(), p).p_part;
      std::uint64_t brute = 0;
      for (const PermGroup &S : subs)
        if (S.order() == p_part)
          ++brute;
      ok = ok && count_sylow(e.group, p).nu_p == brute;
    }
  }
  report(7, ok, "subgroup classes and nu_p match the brute-force oracle on " +
                    std::to_string(groups) + " groups of order <= 1000",
         start);
}

void criterion_8() {
  auto start = Clock::now();
  PermGroup G = make_group({Family::PGammaL2, 32}).group;
  SylowCertificate cert = count_sylow(G, 5);
  PPartition parts = p_partition(G.order(), 5);
  bool ok = cert.nu_p % 5 == 1 && parts.p_prime_part % cert.nu_p == 0;
  for (std::uint64_t seed : {0ull, 1ull}) {
    DivSylReport r = divsyl_check(G, 5, DivSylMode::sampled(seed, 64));
    ok = ok && r.satisfies() && r.nu_p_G == cert.nu_p;
  }
  report(8, ok, "pgammal2(32), p = 5: sampled seeds {0,1} x 64 plus point "
                "stabilizers, zero violations; nu_5 = " +
                    std::to_string(cert.nu_p) +
                    " with nu_5 = 1 mod 5 and nu_5 | |G|_{5'}", start);
}

void criterion_9() {
  auto start = Clock::now();
  bool stable = true;
  std::vector<std::string> rows;
  for (auto [q, p] : std::vector<std::pair<unsigned, unsigned>>{
           {4, 2}, {5, 5}, {7, 7}, {8, 2}, {9, 3}}) {
    FamilyGroup S = make_group({Family::PSL2, q});
    ConjectureReport first = conjecture_scan(S, p);
    ConjectureReport second = conjecture_scan(S, p);
    stable = stable && first.entries.size() == second.entries.size() &&
             first.premise_holds == second.premise_holds;
    for (std::size_t i = 0; stable && i < first.entries.size(); ++i) {
      const ConjectureEntry &a = first.entries[i];
      const ConjectureEntry &b = second.entries[i];
      stable = a.order == b.order && a.nu_p == b.nu_p &&
               a.satisfies == b.satisfies && a.sampled == b.sampled;
    }
    for (const ConjectureEntry &e : first.entries) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "    psl2(%u) p=%u: order %llu index %llu nu_p %llu %s",
                    q, p, static_cast<unsigned long long>(e.order),
                    static_cast<unsigned long long>(e.index_over_socle),
                    static_cast<unsigned long long>(e.nu_p),
                    e.satisfies ? "satisfies" : "violates");
      rows.push_back(buf);
    }
  }
  // the table is the deliverable: reported, not asserted
  report(9, stable, "Remark-3 table stable across repeated full-mode runs",
         start);
  for (const std::string &row : rows)
    std::puts(row.c_str());
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("acceptance: %s\n", all_pass ? "all criteria pass" : "FAILURES");
  return all_pass ? 0 : 1;
}

#include "grp/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>

#include "grp/sylow.hpp"

namespace grp {

namespace {

// canonical keys are exact element-set keys up to this subgroup order;
// within the lattice bound every proper subgroup fits (|H| ≤ |G|/2)
constexpr std::uint64_t kExactKeyBound = 5000;

// conjugation orbit of the subgroup with the given (unsorted) element list;
// all member keys are added to `seen`; returns (class size, least key)
std::pair<std::uint64_t, std::string>
subgroup_orbit(const PermGroup &G, const std::vector<Perm> &elems,
               std::set<std::string> &seen) {
  std::string first_key = element_set_key(elems);
  std::string min_key = first_key;
  seen.insert(first_key);
  std::vector<std::vector<Perm>> frontier{elems};
  std::uint64_t size = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<Perm>> next;
    for (const auto &cur : frontier)
      for (const Perm &g : G.generators()) {
        std::vector<Perm> img;
        img.reserve(cur.size());
        for (const Perm &e : cur)
          img.push_back(conjugate(e, g));
        std::string key = element_set_key(img);
        if (!seen.insert(key).second)
          continue;
        ++size;
        if (key < min_key)
          min_key = key;
        next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return {size, std::move(min_key)};
}

struct WorkItem {
  PermGroup group;
  std::vector<Perm> elements;
};

/// Cyclic extension walk: from the seed subgroups, repeatedly adjoin
/// elements x of the normalizer whose image modulo the subgroup has prime
/// order t (so |⟨H,x⟩| = t·|H| and H ⊴ ⟨H,x⟩). Seeded with all perfect
/// subgroup classes this reaches every subgroup of G; restricted to t = p
/// and seeded with the trivial group it reaches every p-subgroup.
SubgroupClassTable extension_walk(const PermGroup &G,
                                  const std::vector<PermGroup> &seeds,
                                  std::optional<unsigned> only_prime) {
  std::set<std::string> seen;
  std::vector<SubgroupClass> classes;
  std::vector<WorkItem> work;
  bool have_full = false;

  auto add_class = [&](const PermGroup &H, std::vector<Perm> elems) {
    std::string key = element_set_key(elems);
    if (seen.count(key))
      return;
    auto [size, min_key] = subgroup_orbit(G, elems, seen);
    classes.push_back(SubgroupClass{H, size, std::move(min_key)});
    work.push_back(WorkItem{H, std::move(elems)});
  };

  for (const PermGroup &S : seeds) {
    if (S.order() == G.order()) {
      have_full = true;
      continue;
    }
    add_class(S, S.elements());
  }

  for (std::size_t head = 0; head < work.size(); ++head) {
    // the vector may reallocate while we append; copy the item
    WorkItem item = work[head];
    const PermGroup &H = item.group;
    PermGroup N = H.is_trivial() ? G : normalizer(G, H);
    for (const Perm &x : N.elements()) {
      if (H.contains(x))
        continue;
      // order t of the image of x modulo H
      unsigned t = 1;
      Perm y = x;
      while (!H.contains(y)) {
        y = y * x;
        ++t;
      }
      if (!is_prime(t) || (only_prime && t != *only_prime))
        continue;
      std::uint64_t new_order = static_cast<std::uint64_t>(t) * H.order();
      if (new_order == G.order()) {
        have_full = true;
        continue;
      }
      // elements of ⟨H,x⟩ = H ∪ Hx ∪ ... ∪ Hx^{t-1}, no closure needed
      std::vector<Perm> elems;
      elems.reserve(new_order);
      Perm pw(G.degree());
      for (unsigned j = 0; j < t; ++j) {
        for (const Perm &h : item.elements)
          elems.push_back(h * pw);
        pw = pw * x;
      }
      std::string key = element_set_key(elems);
      if (seen.count(key))
        continue;
      std::vector<Perm> gens = H.generators();
      gens.push_back(x);
      add_class(PermGroup(G.degree(), std::move(gens)), std::move(elems));
    }
  }

  bool have_full_class = false;
  for (const SubgroupClass &c : classes)
    if (c.representative.order() == G.order())
      have_full_class = true;
  if (have_full && !have_full_class) {
    std::string key = G.order() <= kExactKeyBound
                          ? element_set_key(G.elements())
                          : std::string("\xff") + "full";
    classes.push_back(SubgroupClass{G, 1, std::move(key)});
  }

  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass &a, const SubgroupClass &b) {
              if (a.representative.order() != b.representative.order())
                return a.representative.order() < b.representative.order();
              return a.canonical_key < b.canonical_key;
            });
  return SubgroupClassTable{G, std::move(classes)};
}

} // namespace

std::uint64_t SubgroupClassTable::total_subgroup_count() const {
  std::uint64_t total = 0;
  for (const SubgroupClass &c : classes)
    total += c.class_size;
  return total;
}

PermGroup perfect_residual(const PermGroup &G) {
  PermGroup R = G;
  while (true) {
    PermGroup next = derived_subgroup(R);
    if (next.order() == R.order())
      return R;
    R = next;
  }
}

std::vector<PermGroup> perfect_subgroup_classes(const PermGroup &G) {
  std::vector<PermGroup> out;
  PermGroup R = perfect_residual(G);
  if (R.is_trivial())
    return out;

  // Every perfect subgroup lies in the perfect residual R (its image in
  // the solvable quotient G/R is trivial) and, at this scale, is generated
  // by two elements. The first generator runs over class representatives
  // of G lying in R; the second over C_G(first)-orbit representatives,
  // since conjugating by the centralizer fixes the first generator.
  std::vector<Perm> relems = R.elements();
  std::sort(relems.begin(), relems.end());

  // distinct candidates bucketed by order; equal orders + containment
  // means equality
  std::map<std::uint64_t, std::vector<std::size_t>> by_order;
  std::vector<std::pair<PermGroup, bool>> cand; // (subgroup, is perfect)

  for (const Perm &c : conjugacy_class_reps(G)) {
    if (c.is_identity() || !R.contains(c))
      continue;
    PermGroup C = centralizer(G, PermGroup(G.degree(), {c}));

    // orbit representatives of C acting on R by conjugation
    std::set<Perm> remaining(relems.begin(), relems.end());
    while (!remaining.empty()) {
      Perm b = *remaining.begin();
      std::vector<Perm> frontier{b};
      remaining.erase(b);
      while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm &e : frontier)
          for (const Perm &z : C.generators()) {
            Perm img = conjugate(e, z);
            if (remaining.erase(img))
              next.push_back(img);
          }
        frontier = std::move(next);
      }

      PermGroup U(G.degree(), {c, b});
      if (U.order() < 60) // smallest nonabelian perfect group is alt(5)
        continue;
      bool known = false;
      for (std::size_t idx : by_order[U.order()])
        if (U.is_subgroup_of(cand[idx].first)) {
          known = true;
          break;
        }
      if (known)
        continue;
      by_order[U.order()].push_back(cand.size());
      cand.emplace_back(U, is_perfect(U));
    }
  }

  // keep one representative per conjugacy class
  std::set<std::string> seen;
  for (const auto &[U, perfect] : cand) {
    if (!perfect)
      continue;
    if (U.order() == G.order()) {
      out.push_back(U);
      continue;
    }
    std::vector<Perm> elems = U.elements();
    if (seen.count(element_set_key(elems)))
      continue;
    subgroup_orbit(G, elems, seen);
    out.push_back(U);
  }
  return out;
}

SubgroupClassTable subgroup_classes(const PermGroup &G) {
  if (G.order() > kLatticeBound)
    throw BoundExceeded("subgroup_classes: group of order " +
                        std::to_string(G.order()) + " exceeds lattice bound");
  std::vector<PermGroup> seeds{PermGroup::trivial(G.degree())};
  for (PermGroup &P : perfect_subgroup_classes(G))
    seeds.push_back(std::move(P));
  return extension_walk(G, seeds, std::nullopt);
}

SubgroupClassTable p_subgroup_classes(const PermGroup &G, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("p_subgroup_classes: p must be prime");
  std::uint64_t p_part = p_partition(G.order(), p).p_part;
  if (G.order() > kLatticeBound &&
      (p_part > 256 || G.order() > kElementScanBound))
    throw BoundExceeded("p_subgroup_classes: out of bounds");
  return extension_walk(G, {PermGroup::trivial(G.degree())}, p);
}

std::vector<PermGroup> brute_subgroups(const PermGroup &G) {
  if (G.order() > kBruteBound)
    throw BoundExceeded("brute_subgroups: group of order " +
                        std::to_string(G.order()) + " exceeds oracle bound");

  // all cyclic subgroups, keyed by element set
  std::map<std::string, PermGroup> found;
  std::vector<PermGroup> cyclics;
  for (const Perm &x : G.elements()) {
    PermGroup C(G.degree(), {x});
    bool fresh = found.emplace(element_set_key(C.elements()), C).second;
    if (fresh && !C.is_trivial())
      cyclics.push_back(C);
  }

  // close under joins with cyclic subgroups
  std::vector<PermGroup> work;
  for (const auto &[key, S] : found)
    work.push_back(S);
  for (std::size_t head = 0; head < work.size(); ++head) {
    PermGroup S = work[head];
    for (const PermGroup &C : cyclics) {
      bool inside = true;
      for (const Perm &g : C.generators())
        if (!S.contains(g)) {
          inside = false;
          break;
        }
      if (inside)
        continue;
      std::vector<Perm> gens = S.generators();
      for (const Perm &g : C.generators())
        gens.push_back(g);
      PermGroup J(G.degree(), gens);
      if (found.emplace(element_set_key(J.elements()), J).second)
        work.push_back(J);
    }
  }

  std::vector<PermGroup> out;
  for (auto &[key, S] : found)
    out.push_back(std::move(S));
  std::sort(out.begin(), out.end(),
            [](const PermGroup &a, const PermGroup &b) {
              return a.order() < b.order();
            });
  return out;
}

DivSylReport divsyl_check(const PermGroup &G, unsigned p, DivSylMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  DivSylReport report;
  report.prime = p;
  report.group_order = G.order();
  report.mode = mode;
  report.nu_p_G = count_sylow(G, p).nu_p;

  auto record = [&](const PermGroup &H, std::uint64_t class_size,
                    std::uint64_t nu) {
    bool divides = report.nu_p_G % nu == 0;
    report.classes.push_back(
        DivSylClassRecord{H.order(), class_size, nu, divides,
                          H.generators()});
    if (!divides)
      report.violations.push_back(report.classes.size() - 1);
  };

  if (mode.kind == DivSylMode::Full) {
    SubgroupClassTable table = subgroup_classes(G);
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
      const PermGroup &H = table.classes[i].representative;
      std::uint64_t nu = count_sylow(H, p).nu_p;
      // ν_p must be constant on the conjugacy class; spot-check three
      // random conjugates rather than trusting the conjugation code
      RandomElements rnd(G, mode.seed + i);
      for (int k = 0; k < 3; ++k) {
        Perm g = rnd.next();
        std::vector<Perm> cgens;
        for (const Perm &h : H.generators())
          cgens.push_back(conjugate(h, g));
        PermGroup Hg(G.degree(), cgens);
        if (count_sylow(Hg, p).nu_p != nu)
          throw std::logic_error(
              "divsyl_check: nu_p not constant on a conjugacy class");
      }
      record(H, table.classes[i].class_size, nu);
    }
  } else {
    // samples: alternating 1- and 2-generator random subgroups, then all
    // point stabilizers; deduplicated by order + mutual containment
    std::vector<PermGroup> samples;
    auto add_sample = [&](const PermGroup &H) {
      for (const PermGroup &S : samples)
        if (S.order() == H.order() && H.is_subgroup_of(S))
          return;
      samples.push_back(H);
    };
    RandomElements rnd(G, mode.seed);
    for (unsigned i = 0; i < mode.count; ++i) {
      Perm a = rnd.next();
      Perm b = rnd.next();
      add_sample(i % 2 == 0 ? PermGroup(G.degree(), {a})
                            : PermGroup(G.degree(), {a, b}));
    }
    for (Point pt = 0; pt < G.degree(); ++pt)
      add_sample(point_stabilizer(G, pt));
    for (const PermGroup &H : samples)
      record(H, 0, count_sylow(H, p).nu_p);
  }

  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return report;
}

} // namespace grp

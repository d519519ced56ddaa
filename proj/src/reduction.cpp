#include "grp/reduction.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "grp/sylow.hpp"

namespace grp {

namespace {

std::vector<std::vector<Point>> point_orbits(const PermGroup &G) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(G.degree(), false);
  for (Point start = 0; start < G.degree(); ++start) {
    if (seen[start])
      continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm &g : G.generators()) {
        Point img = g[orbit[i]];
        if (!seen[img]) {
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Point> &a, const std::vector<Point> &b) {
              return std::make_pair(a.size(), a.front()) <
                     std::make_pair(b.size(), b.front());
            });
  return out;
}

/// The conjugation action of normalizing elements on the element list of a
/// small group, with a fixed deterministic point numbering.
struct ConjAction {
  std::vector<Perm> elems;
  std::map<Perm, Point> index;

  explicit ConjAction(const PermGroup &S) : elems(S.elements(kElementScanBound)) {
    for (Point i = 0; i < elems.size(); ++i)
      index.emplace(elems[i], i);
  }

  Perm act(const Perm &x) const {
    std::vector<Point> img(elems.size());
    for (Point i = 0; i < elems.size(); ++i)
      img[i] = index.at(conjugate(elems[i], x));
    return Perm(std::move(img));
  }
};

std::uint64_t int_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

// the element of the wreath product with x in block i and everything else
// trivial
Perm block_embed(const WreathProduct &w, unsigned i, const Perm &x) {
  std::vector<Perm> coords(w.block_count, Perm(w.inner_degree));
  coords[i] = x;
  return w.assemble(coords, Perm(w.block_count));
}

// the top-group element sigma with trivial base
Perm top_embed(const WreathProduct &w, const Perm &sigma) {
  std::vector<Perm> coords(w.block_count, Perm(w.inner_degree));
  return w.assemble(coords, sigma);
}

bool divsyl_holds_sampled(const PermGroup &G, unsigned p,
                          const std::vector<std::uint64_t> &seeds,
                          unsigned count) {
  for (std::uint64_t seed : seeds)
    if (!divsyl_check(G, p, DivSylMode::sampled(seed, count)).satisfies())
      return false;
  return true;
}

} // namespace

Perm FaithfulRestriction::restrict(const Perm &g) const {
  std::vector<Point> img(degree);
  for (unsigned j = 0; j < degree; ++j)
    img[j] = index_of_old[g[points[j]]];
  return Perm(std::move(img));
}

PermGroup FaithfulRestriction::restrict_group(const PermGroup &G) const {
  std::vector<Perm> gens;
  for (const Perm &g : G.generators())
    gens.push_back(restrict(g));
  return PermGroup(degree, gens);
}

FaithfulRestriction faithful_orbit_restriction(const PermGroup &G) {
  FaithfulRestriction out;
  auto finish = [&](std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    out.points = std::move(pts);
    out.degree = static_cast<unsigned>(out.points.size());
    out.index_of_old.assign(G.degree(), G.degree());
    for (unsigned j = 0; j < out.degree; ++j)
      out.index_of_old[out.points[j]] = j;
  };

  if (G.order() > kElementScanBound || G.is_trivial()) {
    std::vector<Point> all(G.degree());
    for (Point i = 0; i < G.degree(); ++i)
      all[i] = i;
    finish(std::move(all));
    return out;
  }

  std::vector<Perm> fixers = G.elements();
  std::vector<Point> pts;
  for (const std::vector<Point> &orbit : point_orbits(G)) {
    bool moved = false;
    for (const Perm &g : G.generators())
      if (g[orbit.front()] != orbit.front() || orbit.size() > 1)
        moved = true;
    if (!moved)
      continue;
    pts.insert(pts.end(), orbit.begin(), orbit.end());
    std::vector<Perm> still;
    for (const Perm &f : fixers) {
      bool fixes = true;
      for (Point x : orbit)
        if (f[x] != x) {
          fixes = false;
          break;
        }
      if (fixes)
        still.push_back(f);
    }
    fixers = std::move(still);
    if (fixers.size() == 1)
      break;
  }
  finish(std::move(pts));
  return out;
}

PermGroup conjugation_aut_image(const PermGroup &N, const PermGroup &S) {
  ConjAction action(S);
  std::vector<Perm> gens;
  for (const Perm &n : N.generators())
    gens.push_back(action.act(n));
  return PermGroup(static_cast<unsigned>(action.elems.size()), gens);
}

SocleAnalysis socle_analysis(const PermGroup &G) {
  SocleAnalysis out;
  out.group = G;

  std::vector<PermGroup> mins = minimal_normal_subgroups(G);
  if (mins.size() != 1) {
    out.reason = "the minimal normal subgroup is not unique";
    return out;
  }
  if (mins[0].is_abelian()) {
    out.reason = "the socle is abelian";
    return out;
  }
  out.socle = mins[0];
  out.factors = minimal_normal_subgroups(out.socle);

  std::uint64_t product = 1;
  std::vector<Perm> factor_gens;
  for (const PermGroup &S : out.factors) {
    if (!is_simple(S)) {
      out.reason = "a socle factor is not simple";
      return out;
    }
    product *= S.order();
    for (const Perm &s : S.generators())
      factor_gens.push_back(s);
  }
  if (product != out.socle.order() ||
      PermGroup(G.degree(), factor_gens).order() != out.socle.order()) {
    out.reason = "the socle is not the direct product of its factors";
    return out;
  }

  unsigned k = static_cast<unsigned>(out.factors.size());
  auto factors = std::make_shared<std::vector<PermGroup>>(out.factors);
  auto on_factors = [factors, k](const Perm &g) {
    std::vector<Point> img(k);
    for (unsigned i = 0; i < k; ++i) {
      bool placed = false;
      for (unsigned j = 0; j < k && !placed; ++j) {
        bool inside = (*factors)[i].order() == (*factors)[j].order();
        for (const Perm &s : (*factors)[i].generators())
          inside = inside && (*factors)[j].contains(conjugate(s, g));
        if (inside) {
          img[i] = j;
          placed = true;
        }
      }
      if (!placed)
        throw std::logic_error("conjugation does not permute the socle factors");
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> rho_gens;
  for (const Perm &g : G.generators())
    rho_gens.push_back(on_factors(g));
  out.rho_image = PermGroup(k, rho_gens);
  out.rho = Homomorphism{G, out.rho_image, k, on_factors};

  for (const PermGroup &S : out.factors)
    out.induced.push_back(conjugation_aut_image(normalizer(G, S), S));

  out.applicable = true;
  return out;
}

WreathEmbedding wreath_embed(const PermGroup &G, const PermGroup &H) {
  WreathEmbedding out;
  out.socle = socle_analysis(G);
  out.subgroup_h = H;
  if (!out.socle.applicable) {
    out.reason = out.socle.reason;
    return out;
  }
  if (!H.is_subgroup_of(G)) {
    out.reason = "H is not a subgroup of G";
    return out;
  }
  std::vector<Perm> ht_gens = H.generators();
  for (const Perm &s : out.socle.socle.generators())
    ht_gens.push_back(s);
  if (PermGroup(G.degree(), ht_gens).order() != G.order()) {
    out.reason = "H together with the socle does not generate G";
    return out;
  }

  unsigned k = static_cast<unsigned>(out.socle.factors.size());
  out.reps.assign(k, Perm(G.degree()));
  std::vector<bool> found(k, false);
  found[0] = true;
  unsigned missing = k - 1;
  for (const Perm &h : H.elements(kElementScanBound)) {
    if (missing == 0)
      break;
    unsigned i = out.socle.rho.map(h)[0];
    if (!found[i]) {
      found[i] = true;
      out.reps[i] = h;
      --missing;
    }
  }
  if (missing != 0) {
    out.reason = "H is not transitive on the socle factors";
    return out;
  }

  auto theta = std::make_shared<ConjAction>(out.socle.factors[0]);
  out.target = wreath_product(out.socle.induced[0], out.socle.rho_image);

  auto rho_map = out.socle.rho.map;
  auto reps = out.reps;
  out.cocycle = [reps, rho_map](unsigned i, const Perm &g) {
    return reps[i] * g * reps[rho_map(g)[i]].inverse();
  };

  WreathProduct target = out.target;
  auto cocycle = out.cocycle;
  auto phi_map = [cocycle, theta, rho_map, target, k](const Perm &g) {
    std::vector<Perm> coords;
    for (unsigned i = 0; i < k; ++i)
      coords.push_back(theta->act(cocycle(i, g)));
    return target.assemble(coords, rho_map(g));
  };

  std::vector<Perm> image_gens;
  for (const Perm &g : G.generators())
    image_gens.push_back(phi_map(g));
  out.image = PermGroup(target.group.degree(), image_gens);
  out.phi = Homomorphism{G, out.image, target.group.degree(), phi_map};
  if (out.image.order() != G.order()) {
    out.reason = "the embedding is not injective";
    return out;
  }
  out.applicable = true;
  return out;
}

NumpwreathVerdict numpwreath_check(const WreathProduct &w, const PermGroup &L,
                                   const PermGroup &S, const PermGroup &K,
                                   const PermGroup &G, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("numpwreath_check: p must be prime");
  if (L.degree() != w.inner_degree || K.degree() != w.block_count)
    throw std::invalid_argument("numpwreath_check: degree mismatch");

  NumpwreathVerdict v;
  unsigned k = w.block_count;

  if (!S.is_subgroup_of(L) || !is_normal_in(S, L)) {
    v.reason = "S is not normal in L";
    return v;
  }
  if (p_partition(L.order() / S.order(), p).p_prime_part != 1) {
    v.reason = "L/S is not a p-group";
    return v;
  }
  if (p_partition(K.order(), p).p_prime_part != 1) {
    v.reason = "K is not a p-group";
    return v;
  }
  std::vector<Point> korbit{0};
  {
    std::vector<bool> seen(k, false);
    seen[0] = true;
    for (std::size_t i = 0; i < korbit.size(); ++i)
      for (const Perm &g : K.generators())
        if (!seen[g[korbit[i]]]) {
          seen[g[korbit[i]]] = true;
          korbit.push_back(g[korbit[i]]);
        }
  }
  if (korbit.size() != k) {
    v.reason = "K is not transitive";
    return v;
  }
  if (!G.is_subgroup_of(w.group)) {
    v.reason = "G is not inside the wreath product";
    return v;
  }

  for (unsigned i = 0; i < k; ++i)
    for (const Perm &s : S.generators())
      if (!G.contains(block_embed(w, i, s))) {
        v.reason = "(a) the product of the socle copies is not inside G";
        return v;
      }

  std::vector<Perm> full_gens = G.generators();
  for (unsigned i = 0; i < k; ++i)
    for (const Perm &l : L.generators())
      full_gens.push_back(block_embed(w, i, l));
  if (PermGroup(w.group.degree(), full_gens).order() != w.group.order()) {
    v.reason = "(b) G together with the base does not generate the wreath product";
    return v;
  }

  for (unsigned i = 0; i < k; ++i) {
    std::vector<Perm> si_gens;
    for (const Perm &s : S.generators())
      si_gens.push_back(block_embed(w, i, s));
    PermGroup Si(w.group.degree(), si_gens);
    PermGroup Ni = normalizer(G, Si);
    std::vector<Perm> proj_gens;
    for (const Perm &n : Ni.generators())
      proj_gens.push_back(w.pi(i, n));
    if (!PermGroup(w.inner_degree, proj_gens).same_group_as(L)) {
      v.reason = "(c) a normalizer does not project onto L";
      return v;
    }
  }

  PermGroup P = sylow_subgroup(L, p);
  std::vector<Perm> m_gens;
  for (unsigned i = 0; i < k; ++i)
    for (const Perm &x : P.generators())
      m_gens.push_back(block_embed(w, i, x));
  for (const Perm &sigma : K.generators())
    m_gens.push_back(top_embed(w, sigma));
  PermGroup M(w.group.degree(), m_gens);
  if (p_partition(intersection(G, M).order(), p).p_part !=
      p_partition(G.order(), p).p_part) {
    v.reason = "(d) no Sylow p-subgroup of G lies over the blocks";
    return v;
  }

  v.applicable = true;
  v.formula_value = int_pow(p_partition(S.order(), p).p_prime_part, k - 1) *
                    count_sylow(L, p).nu_p;
  v.direct_value = count_sylow(G, p).nu_p;
  v.equal = v.formula_value == v.direct_value;
  return v;
}

SubdirectVerdict subdirect_check(const WreathProduct &w,
                                 const PermGroup &factor, const PermGroup &G,
                                 const PermGroup &H, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("subdirect_check: p must be prime");
  if (factor.degree() != w.inner_degree)
    throw std::invalid_argument("subdirect_check: degree mismatch");

  SubdirectVerdict v;
  unsigned k = w.block_count;

  std::vector<Perm> t_gens;
  for (unsigned i = 0; i < k; ++i)
    for (const Perm &s : factor.generators())
      t_gens.push_back(block_embed(w, i, s));
  PermGroup T(w.group.degree(), t_gens);

  if (!G.is_subgroup_of(w.group)) {
    v.reason = "G is not inside the wreath product";
    return v;
  }
  if (!T.is_subgroup_of(G) || !is_normal_in(T, G)) {
    v.reason = "the factor product is not normal in G";
    return v;
  }
  if (p_partition(G.order() / T.order(), p).p_prime_part != 1) {
    v.reason = "G over the factor product is not a p-group";
    return v;
  }
  if (!H.is_subgroup_of(G)) {
    v.reason = "H is not a subgroup of G";
    return v;
  }

  PermGroup I = intersection(H, T);
  std::vector<PermGroup> projections;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Perm> gens;
    for (const Perm &x : I.generators())
      gens.push_back(w.pi(i, x));
    projections.emplace_back(w.inner_degree, gens);
    v.projection_orders.push_back(projections.back().order());
  }
  for (const PermGroup &Hi : projections)
    if (!Hi.is_trivial() && !Hi.same_group_as(factor)) {
      v.reason = "a projection of H ∩ T is neither trivial nor the factor";
      v.projection_orders.clear();
      return v;
    }

  v.applicable = true;
  v.nu_H = count_sylow(H, p).nu_p;
  v.nu_G = count_sylow(G, p).nu_p;
  v.divides = v.nu_G % v.nu_H == 0;

  std::vector<Perm> ht_gens = H.generators();
  for (const Perm &t : T.generators())
    ht_gens.push_back(t);
  if (PermGroup(w.group.degree(), ht_gens).order() != G.order())
    return v;

  v.equal_projections = true;
  for (const PermGroup &Hi : projections)
    v.equal_projections =
        v.equal_projections && Hi.order() == projections[0].order();

  std::vector<Perm> prod_gens;
  for (unsigned i = 0; i < k; ++i)
    for (const Perm &x : projections[i].generators())
      prod_gens.push_back(block_embed(w, i, x));
  if (!PermGroup(w.group.degree(), prod_gens).same_group_as(I))
    return v;

  v.product_formula_checked = true;
  std::vector<Perm> s1_gens;
  for (const Perm &s : factor.generators())
    s1_gens.push_back(block_embed(w, 0, s));
  PermGroup S1(w.group.degree(), s1_gens);
  PermGroup NH = subgroup_where(H, [&](const Perm &x) {
    for (const Perm &s : S1.generators())
      if (!S1.contains(conjugate(s, x)))
        return false;
    return true;
  });
  PermGroup aut = conjugation_aut_image(NH, S1);
  v.formula_lhs = v.nu_H;
  v.formula_rhs =
      count_sylow(aut, p).nu_p *
      int_pow(p_partition(projections[0].order(), p).p_prime_part, k - 1);
  v.formula_equal = v.formula_lhs == v.formula_rhs;
  return v;
}

MainTheoremRecord main_theorem_check(const PermGroup &G, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("main_theorem_check: p must be prime");

  MainTheoremRecord rec{p, true, false, {}};
  SectionSeries rc = rc_series(G);
  std::set<std::pair<std::uint64_t, std::string>> checked;

  for (std::size_t i = 0; i < rc.section_count(); ++i) {
    std::uint64_t so = rc.section_order(i);
    // simple sections of prime order are the abelian ones
    if (so < 60 || is_prime(static_cast<unsigned>(so))) {
      rec.section_notes.push_back("section of order " + std::to_string(so) +
                                  ": abelian, skipped");
      continue;
    }
    InducedAutGroup aut = induced_aut(G, rc.section(i));
    FaithfulRestriction fr = faithful_orbit_restriction(aut.image);
    PermGroup A = fr.restrict_group(aut.image);
    PermGroup inner = fr.restrict_group(aut.inner_image);

    SubgroupClassTable pclasses = p_subgroup_classes(A, p);
    std::size_t tested = 0;
    bool section_ok = true;
    for (const SubgroupClass &c : pclasses.classes) {
      std::vector<Perm> u_gens = c.representative.generators();
      for (const Perm &x : inner.generators())
        u_gens.push_back(x);
      PermGroup U(A.degree(), u_gens);
      auto key = std::make_pair(U.order(), element_set_key(U.elements()));
      if (!checked.insert(key).second)
        continue;
      ++tested;
      if (!divsyl_check(U, p, DivSylMode::full()).satisfies()) {
        section_ok = false;
        rec.hypothesis = false;
      }
    }
    rec.section_notes.push_back(
        "section of order " + std::to_string(so) + ": |Aut| = " +
        std::to_string(A.order()) + ", " + std::to_string(tested) +
        " groups tested, hypothesis " + (section_ok ? "holds" : "fails"));
  }

  rec.conclusion = divsyl_check(G, p, DivSylMode::full()).satisfies();
  return rec;
}

bool PropositionVerdict::satisfied() const {
  if (!applicable || reports.empty())
    return false;
  for (const DivSylReport &r : reports)
    if (!r.satisfies())
      return false;
  return true;
}

PropositionVerdict proposition_check(const PermGroup &A, const PermGroup &S,
                                     unsigned p,
                                     std::vector<std::uint64_t> seeds,
                                     unsigned count) {
  if (!is_prime(p))
    throw std::invalid_argument("proposition_check: p must be prime");

  PropositionVerdict v;
  if (!S.is_subgroup_of(A) || !is_normal_in(S, A)) {
    v.reason = "S is not normal in A";
    return v;
  }
  if (S.order() % p == 0) {
    v.reason = "p divides |S|";
    return v;
  }
  if (A.order() / S.order() >= 60) {
    // groups of order below 60 are solvable, so the quotient needs no scan
    v.reason = "A/S is too large to certify solvable";
    return v;
  }
  v.applicable = true;
  v.nu_p = count_sylow(A, p).nu_p;
  if (A.order() <= kLatticeBound) {
    v.sampled = false;
    v.reports.push_back(divsyl_check(A, p, DivSylMode::full()));
  } else {
    v.sampled = true;
    for (std::uint64_t seed : seeds)
      v.reports.push_back(divsyl_check(A, p, DivSylMode::sampled(seed, count)));
  }
  return v;
}

bool ConjectureReport::all_satisfy() const {
  if (entries.empty())
    return false;
  for (const ConjectureEntry &e : entries)
    if (!e.satisfies)
      return false;
  return true;
}

ConjectureReport conjecture_scan(const FamilyGroup &S, unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("conjecture_scan: p must be prime");

  ConjectureReport rep;
  FamilyGroup A = aut_overgroup(S);
  const PermGroup &soc = S.group;

  if (soc.order() <= kLatticeBound)
    rep.premise_holds = divsyl_check(soc, p, DivSylMode::full()).satisfies();
  else
    rep.premise_holds = divsyl_holds_sampled(soc, p, {0, 1}, 64);
  if (!rep.premise_holds)
    rep.reason = "the socle itself violates the divisibility";

  // right-coset representatives of the socle inside the overgroup
  std::vector<Perm> reps{Perm(A.group.degree())};
  std::uint64_t index = A.group.order() / soc.order();
  auto coset_of = [&](const Perm &x) -> unsigned {
    for (unsigned j = 0; j < reps.size(); ++j)
      if (soc.contains(x * reps[j].inverse()))
        return j;
    throw std::logic_error("conjecture_scan: element outside all cosets");
  };
  for (std::size_t i = 0; i < reps.size() && reps.size() < index; ++i)
    for (const Perm &g : A.group.generators()) {
      Perm x = reps[i] * g;
      bool fresh = true;
      for (const Perm &r : reps)
        if (soc.contains(x * r.inverse())) {
          fresh = false;
          break;
        }
      if (fresh)
        reps.push_back(x);
    }
  if (reps.size() != index)
    throw std::logic_error("conjecture_scan: coset enumeration incomplete");

  std::vector<Perm> q_gens;
  for (const Perm &g : A.group.generators()) {
    std::vector<Point> img(reps.size());
    for (unsigned j = 0; j < reps.size(); ++j)
      img[j] = coset_of(reps[j] * g);
    q_gens.push_back(Perm(std::move(img)));
  }
  PermGroup Q(static_cast<unsigned>(reps.size()), q_gens);

  for (const PermGroup &U : brute_subgroups(Q)) {
    std::vector<Perm> l_gens = soc.generators();
    for (const Perm &u : U.elements())
      l_gens.push_back(reps[u[0]]);
    PermGroup L(A.group.degree(), l_gens);

    ConjectureEntry e;
    e.order = L.order();
    e.index_over_socle = L.order() / soc.order();
    e.nu_p = count_sylow(L, p).nu_p;
    if (L.order() <= kLatticeBound) {
      e.sampled = false;
      e.satisfies = divsyl_check(L, p, DivSylMode::full()).satisfies();
    } else {
      e.sampled = true;
      e.satisfies = divsyl_holds_sampled(L, p, {0, 1}, 64);
    }
    rep.entries.push_back(e);
  }
  return rep;
}

} // namespace grp

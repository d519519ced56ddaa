#include "grp/series.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "grp/sylow.hpp"

namespace grp {

namespace {

constexpr std::uint64_t kSectionBound = 10000;

// lazily computed element-set key for deterministic tie-breaks
struct KeyedGroup {
  PermGroup group;
  mutable std::optional<std::string> key;

  const std::string &get_key() const {
    if (!key)
      key = element_set_key(group.elements());
    return *key;
  }
};

void sort_by_order_then_key(std::vector<KeyedGroup> &groups) {
  std::sort(groups.begin(), groups.end(),
            [](const KeyedGroup &a, const KeyedGroup &b) {
              if (a.group.order() != b.group.order())
                return a.group.order() < b.group.order();
              return a.get_key() < b.get_key();
            });
}

} // namespace

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &G) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded("minimal_normal_subgroups: group too large");
  if (G.is_trivial())
    return {};

  std::vector<Perm> reps = conjugacy_class_reps(G);
  std::vector<PermGroup> closures;
  for (const Perm &c : reps) {
    if (c.is_identity())
      continue;
    PermGroup M = normal_closure(G, {c});
    bool dup = false;
    for (const PermGroup &X : closures)
      if (X.order() == M.order() && M.is_subgroup_of(X)) {
        dup = true;
        break;
      }
    if (!dup)
      closures.push_back(std::move(M));
  }

  std::vector<KeyedGroup> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool is_minimal = true;
    for (std::size_t j = 0; j < closures.size() && is_minimal; ++j)
      if (j != i && closures[j].order() < closures[i].order() &&
          closures[j].is_subgroup_of(closures[i]))
        is_minimal = false;
    if (is_minimal)
      minimal.push_back(KeyedGroup{closures[i], std::nullopt});
  }

  // re-verify minimality: the closure of every element class must be the
  // whole subgroup
  for (const KeyedGroup &kg : minimal)
    for (const Perm &c : reps) {
      if (c.is_identity() || !kg.group.contains(c))
        continue;
      if (normal_closure(G, {c}).order() != kg.group.order())
        throw std::logic_error(
            "minimal_normal_subgroups: candidate is not minimal");
    }

  sort_by_order_then_key(minimal);
  std::vector<PermGroup> out;
  for (KeyedGroup &kg : minimal)
    out.push_back(std::move(kg.group));
  return out;
}

PermGroup maximal_normal_subgroup(const PermGroup &G) {
  if (G.is_trivial())
    throw std::invalid_argument(
        "maximal_normal_subgroup: trivial group has no proper subgroup");
  if (G.order() > kElementScanBound)
    throw BoundExceeded("maximal_normal_subgroup: group too large");

  std::vector<Perm> reps = conjugacy_class_reps(G);
  // grow a proper normal subgroup by joining single-class closures until
  // no proper extension exists; always take the largest (then least-key)
  // extension, so the result is maximal normal
  PermGroup best = PermGroup::trivial(G.degree());
  bool grew = true;
  while (grew) {
    grew = false;
    std::optional<KeyedGroup> next;
    for (const Perm &c : reps) {
      if (c.is_identity() || best.contains(c))
        continue;
      std::vector<Perm> seeds = best.generators();
      seeds.push_back(c);
      PermGroup M = normal_closure(G, seeds);
      if (M.order() == G.order())
        continue;
      KeyedGroup cand{std::move(M), std::nullopt};
      if (!next || cand.group.order() > next->group.order() ||
          (cand.group.order() == next->group.order() &&
           cand.get_key() < next->get_key()))
        next = std::move(cand);
    }
    if (next && next->group.order() > best.order()) {
      best = std::move(next->group);
      grew = true;
    }
  }
  return best;
}

SectionQuotient section_quotient(const Section &sec) {
  if (!is_normal_in(sec.lower, sec.upper))
    throw std::invalid_argument("section_quotient: lower not normal in upper");
  if (sec.lower.is_trivial()) {
    const PermGroup &A = sec.upper;
    return SectionQuotient{
        A, Homomorphism{A, A, A.degree(), [](const Perm &g) { return g; }}};
  }
  auto [Q, phi] = quotient_group(sec.upper, sec.lower);
  return SectionQuotient{std::move(Q), std::move(phi)};
}

SectionSeries chief_series(const PermGroup &G) {
  SectionSeries out{G, SeriesKind::Chief, {PermGroup::trivial(G.degree())},
                    {true}};
  while (out.chain.back().order() < G.order()) {
    const PermGroup &cur = out.chain.back();
    PermGroup next = PermGroup::trivial(G.degree());
    if (cur.is_trivial()) {
      next = minimal_normal_subgroups(G).front();
    } else {
      auto [Q, phi] = quotient_group(G, cur);
      PermGroup Mbar = minimal_normal_subgroups(Q).front();
      if (Mbar.order() == Q.order()) {
        next = G;
      } else {
        auto map = phi.map;
        next = subgroup_where(
            G, [&](const Perm &g) { return Mbar.contains(map(g)); });
      }
    }
    out.chain.push_back(std::move(next));
    out.normal_in_group.push_back(true);
  }
  return out;
}

SectionSeries composition_series(const PermGroup &G) {
  std::vector<PermGroup> descending{G};
  while (!descending.back().is_trivial())
    descending.push_back(maximal_normal_subgroup(descending.back()));

  SectionSeries out{G, SeriesKind::Composition, {}, {}};
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) {
    out.chain.push_back(*it);
    out.normal_in_group.push_back(is_normal_in(*it, G));
  }
  return out;
}

SectionSeries rc_series(const PermGroup &G) {
  SectionSeries chief = chief_series(G);
  SectionSeries out{G, SeriesKind::RC, {chief.chain.front()}, {true}};

  for (std::size_t i = 0; i + 1 < chief.chain.size(); ++i) {
    const PermGroup &B = chief.chain[i];
    const PermGroup &A = chief.chain[i + 1];
    SectionQuotient sq = section_quotient(Section{A, B});
    if (!is_simple(sq.quotient)) {
      // refine the chief factor by a composition series of its quotient,
      // pulled back through the projection
      SectionSeries cs = composition_series(sq.quotient);
      for (std::size_t j = 1; j + 1 < cs.chain.size(); ++j) {
        const PermGroup &T = cs.chain[j];
        auto map = sq.projection.map;
        PermGroup pre = subgroup_where(
            A, [&](const Perm &g) { return T.contains(map(g)); });
        out.normal_in_group.push_back(is_normal_in(pre, G));
        out.chain.push_back(std::move(pre));
      }
    }
    out.chain.push_back(A);
    out.normal_in_group.push_back(true);
  }
  return out;
}

InducedAutGroup induced_aut(const PermGroup &G, const Section &sec) {
  const PermGroup &A = sec.upper;
  const PermGroup &B = sec.lower;
  if (!A.is_subgroup_of(G))
    throw std::invalid_argument("induced_aut: section not inside the group");
  if (!is_normal_in(B, A))
    throw std::invalid_argument("induced_aut: lower not normal in upper");
  if (sec.order() > kSectionBound)
    throw BoundExceeded("induced_aut: section index too large");

  PermGroup NA = A.order() == G.order() ? G : normalizer(G, A);
  PermGroup NB = B.is_trivial() ? G : normalizer(G, B);
  PermGroup N = NA.order() == G.order()
                    ? NB
                    : (NB.order() == G.order() ? NA : intersection(NA, NB));

  // enumerate the cosets Ba of B in A; canonical representative is the
  // least element of the coset
  std::vector<Perm> b_elems = B.elements();
  auto canonical = [&b_elems](const Perm &r) {
    Perm best = b_elems[0] * r;
    for (std::size_t i = 1; i < b_elems.size(); ++i) {
      Perm cand = b_elems[i] * r;
      if (cand < best)
        best = cand;
    }
    return best;
  };

  std::vector<Perm> reps{canonical(Perm(A.degree()))};
  std::map<Perm, unsigned> coset_of; // any element of A -> its coset index
  auto index_coset = [&](const Perm &rep, unsigned idx) {
    for (const Perm &b : b_elems)
      coset_of.emplace(b * rep, idx);
  };
  index_coset(reps[0], 0);
  for (std::size_t head = 0; head < reps.size(); ++head)
    for (const Perm &g : A.generators()) {
      Perm img = reps[head] * g;
      if (!coset_of.count(img)) {
        Perm rep = canonical(img);
        reps.push_back(rep);
        index_coset(rep, static_cast<unsigned>(reps.size() - 1));
      }
    }

  unsigned deg = static_cast<unsigned>(reps.size());
  auto reps_ptr = std::make_shared<std::vector<Perm>>(std::move(reps));
  auto coset_ptr =
      std::make_shared<std::map<Perm, unsigned>>(std::move(coset_of));
  auto act = [reps_ptr, coset_ptr, deg](const Perm &x) {
    std::vector<Point> images(deg);
    for (unsigned i = 0; i < deg; ++i)
      images[i] = coset_ptr->at(conjugate((*reps_ptr)[i], x));
    return Perm(std::move(images));
  };

  std::vector<Perm> image_gens;
  for (const Perm &n : N.generators())
    image_gens.push_back(act(n));
  PermGroup image(deg, image_gens);

  std::vector<Perm> inner_gens;
  for (const Perm &a : A.generators())
    inner_gens.push_back(act(a));
  PermGroup inner(deg, inner_gens);

  PermGroup ker =
      subgroup_where(N, [&](const Perm &x) { return act(x).is_identity(); });

  if (image.order() * ker.order() != N.order())
    throw std::logic_error("induced_aut: |image|·|kernel| != |normalizer|");

  return InducedAutGroup{sec,
                         std::move(N),
                         std::move(ker),
                         std::move(image),
                         std::move(inner),
                         Homomorphism{N, image, deg, act}};
}

namespace {

struct SectionFingerprint {
  std::uint64_t order;
  bool abelian;
  std::map<unsigned long long, unsigned> order_histogram;

  bool operator==(const SectionFingerprint &) const = default;
};

SectionFingerprint fingerprint(const SectionQuotient &sq) {
  SectionFingerprint fp{sq.quotient.order(), sq.quotient.is_abelian(), {}};
  for (const Perm &e : sq.quotient.elements())
    ++fp.order_histogram[e.order()];
  return fp;
}

} // namespace

SeriesComparison compare_series(const PermGroup &G, const SectionSeries &s1,
                                const SectionSeries &s2) {
  if (s1.section_count() != s2.section_count())
    throw std::invalid_argument("compare_series: section counts differ");
  std::size_t n = s1.section_count();

  std::vector<SectionFingerprint> fp1(n), fp2(n);
  SeriesComparison cmp{false, {}, {}, {}, ""};
  for (std::size_t i = 0; i < n; ++i) {
    fp1[i] = fingerprint(section_quotient(s1.section(i)));
    fp2[i] = fingerprint(section_quotient(s2.section(i)));
    cmp.aut_orders_1.push_back(induced_aut(G, s1.section(i)).image.order());
    cmp.aut_orders_2.push_back(induced_aut(G, s2.section(i)).image.order());
  }

  bool require_equal =
      s1.kind == SeriesKind::RC && s2.kind == SeriesKind::RC;
  auto compatible = [&](std::size_t i, std::size_t j) {
    if (!(fp1[i] == fp2[j]))
      return false;
    if (require_equal)
      return cmp.aut_orders_1[i] == cmp.aut_orders_2[j];
    return cmp.aut_orders_2[j] % cmp.aut_orders_1[i] == 0;
  };

  std::vector<std::size_t> sigma(n, n);
  std::vector<bool> used(n, false);
  auto backtrack = [&](auto &&self, std::size_t i) -> bool {
    if (i == n)
      return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !compatible(i, j))
        continue;
      used[j] = true;
      sigma[i] = j;
      if (self(self, i + 1))
        return true;
      used[j] = false;
    }
    return false;
  };

  if (backtrack(backtrack, 0)) {
    cmp.matched = true;
    cmp.sigma = std::move(sigma);
  } else {
    cmp.detail = "no fingerprint/divisibility matching exists";
  }
  return cmp;
}

Lemma6Verdict lemma6_check(const PermGroup &G, const PermGroup &H,
                           const PermGroup &K, const PermGroup &Q,
                           unsigned p) {
  auto inapplicable = [](const char *why) {
    return Lemma6Verdict{false, why};
  };
  if (!is_normal_in(H, G) || !is_normal_in(K, G))
    return inapplicable("H and K must be normal in G");
  if (!H.is_subgroup_of(K))
    return inapplicable("H must lie in K");
  if (p_partition(H.order(), p).p_prime_part != 1)
    return inapplicable("H must be a p-group");
  if (p_partition(K.order() / H.order(), p).p_part != 1)
    return inapplicable("K/H must be a p'-group");
  if (p_partition(G.order() / K.order(), p).p_prime_part != 1)
    return inapplicable("G/K must be a p-group");
  if (!Q.is_subgroup_of(G) || !H.is_subgroup_of(Q))
    return inapplicable("Q must lie between H and G");
  if (p_partition(Q.order(), p).p_prime_part != 1)
    return inapplicable("Q must be a p-group");

  PermGroup P = sylow_subgroup_containing(G, Q, p);

  auto normalizes = [](const PermGroup &S) {
    return [&S](const Perm &x) {
      for (const Perm &g : S.generators())
        if (!S.contains(conjugate(g, x)))
          return false;
      return true;
    };
  };
  PermGroup NKP = subgroup_where(K, normalizes(P));
  PermGroup NKQ = subgroup_where(K, normalizes(Q));

  Lemma6Verdict v{true, ""};
  v.normalizer_containment = NKP.is_subgroup_of(NKQ);

  // image identity: N_K(Q) mod H = C_{K/H}(Q/H)
  auto [Gbar, phi] = quotient_group(G, H);
  auto image_of = [&](const PermGroup &S) {
    std::vector<Perm> gens;
    for (const Perm &g : S.generators())
      gens.push_back(phi.map(g));
    return PermGroup(Gbar.degree(), gens);
  };
  PermGroup Kbar = image_of(K);
  PermGroup Qbar = image_of(Q);
  v.image_identity = image_of(NKQ).same_group_as(centralizer(Kbar, Qbar));
  return v;
}

PermGroup solvable_radical(const PermGroup &G) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded("solvable_radical: group too large");
  std::vector<Perm> reps = conjugacy_class_reps(G);
  PermGroup R = PermGroup::trivial(G.degree());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Perm &c : reps) {
      if (c.is_identity() || R.contains(c))
        continue;
      std::vector<Perm> seeds = R.generators();
      seeds.push_back(c);
      PermGroup M = normal_closure(G, seeds);
      if (!is_solvable(M))
        continue;
      R = std::move(M);
      grew = true;
    }
  }
  return R;
}

} // namespace grp

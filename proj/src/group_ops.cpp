#include "grp/group_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <memory>
#include <numeric>

namespace grp {

namespace {

void check_scan_bound(const PermGroup &G, const char *op) {
  if (G.order() > kElementScanBound)
    throw BoundExceeded(std::string(op) + ": group of order " +
                        std::to_string(G.order()) +
                        " too large for element scan");
}

} // namespace

std::string element_set_key(std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  std::string key;
  if (elems.empty())
    return key;
  key.reserve(elems.size() * elems[0].degree() * 2);
  for (const Perm &e : elems)
    for (Point x : e.images()) {
      key.push_back(static_cast<char>(x & 0xff));
      key.push_back(static_cast<char>((x >> 8) & 0xff));
    }
  return key;
}

PermGroup subgroup_where(const PermGroup &G,
                         const std::function<bool(const Perm &)> &keep) {
  check_scan_bound(G, "subgroup_where");
  std::vector<Perm> gens;
  PermGroup sub = PermGroup::trivial(G.degree());
  for (const Perm &g : G.elements()) {
    if (sub.contains(g) || !keep(g))
      continue;
    gens.push_back(g);
    sub = PermGroup(G.degree(), gens);
  }
  return sub;
}

PermGroup normalizer(const PermGroup &G, const PermGroup &H) {
  if (H.degree() != G.degree())
    throw std::invalid_argument("normalizer: degree mismatch");
  check_scan_bound(G, "normalizer");
  return subgroup_where(G, [&](const Perm &g) {
    for (const Perm &h : H.generators())
      if (!H.contains(conjugate(h, g)))
        return false;
    return true;
  });
}

PermGroup centralizer(const PermGroup &G, const PermGroup &H) {
  if (H.degree() != G.degree())
    throw std::invalid_argument("centralizer: degree mismatch");
  check_scan_bound(G, "centralizer");
  return subgroup_where(G, [&](const Perm &g) {
    for (const Perm &h : H.generators())
      if (!(h * g == g * h))
        return false;
    return true;
  });
}

PermGroup intersection(const PermGroup &G, const PermGroup &H) {
  if (H.degree() != G.degree())
    throw std::invalid_argument("intersection: degree mismatch");
  const PermGroup &small = G.order() <= H.order() ? G : H;
  const PermGroup &large = G.order() <= H.order() ? H : G;
  check_scan_bound(small, "intersection");
  return subgroup_where(small,
                        [&](const Perm &g) { return large.contains(g); });
}

PermGroup normal_closure(const PermGroup &G, const std::vector<Perm> &seeds) {
  for (const Perm &s : seeds)
    if (!G.contains(s))
      throw std::invalid_argument("normal_closure: seed not a member of G");

  std::vector<Perm> gens;
  for (const Perm &s : seeds)
    if (!s.is_identity())
      gens.push_back(s);
  PermGroup N(G.degree(), gens);

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm &n : std::vector<Perm>(gens)) {
      for (const Perm &g : G.generators()) {
        Perm c = conjugate(n, g);
        if (!N.contains(c)) {
          gens.push_back(c);
          N = PermGroup(G.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return N;
}

PermGroup derived_subgroup(const PermGroup &G) {
  std::vector<Perm> comms;
  const auto &gens = G.generators();
  for (const Perm &a : gens)
    for (const Perm &b : gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity())
        comms.push_back(c);
    }
  return normal_closure(G, comms);
}

bool is_normal_in(const PermGroup &N, const PermGroup &G) {
  if (!N.is_subgroup_of(G))
    return false;
  for (const Perm &n : N.generators())
    for (const Perm &g : G.generators())
      if (!N.contains(conjugate(n, g)))
        return false;
  return true;
}

bool is_solvable(const PermGroup &G) {
  PermGroup D = G;
  while (!D.is_trivial()) {
    PermGroup next = derived_subgroup(D);
    if (next.order() == D.order())
      return false;
    D = next;
  }
  return true;
}

bool is_perfect(const PermGroup &G) {
  return derived_subgroup(G).order() == G.order();
}

PermGroup point_stabilizer(const PermGroup &G, Point p) {
  check_scan_bound(G, "point_stabilizer");
  return subgroup_where(G, [&](const Perm &g) { return g[p] == p; });
}

std::vector<Perm> conjugacy_class_reps(const PermGroup &G) {
  check_scan_bound(G, "conjugacy_class_reps");
  std::vector<Perm> elems = G.elements();
  std::sort(elems.begin(), elems.end());
  std::set<Perm> unseen(elems.begin(), elems.end());
  std::vector<Perm> reps;
  while (!unseen.empty()) {
    Perm rep = *unseen.begin();
    reps.push_back(rep);
    // orbit of rep under conjugation by generators
    std::vector<Perm> frontier{rep};
    unseen.erase(rep);
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm &e : frontier)
        for (const Perm &g : G.generators()) {
          Perm c = conjugate(e, g);
          if (unseen.erase(c))
            next.push_back(c);
        }
      frontier = std::move(next);
    }
  }
  return reps;
}

bool is_simple(const PermGroup &G) {
  if (G.order() == 1)
    return false;
  for (const Perm &rep : conjugacy_class_reps(G)) {
    if (rep.is_identity())
      continue;
    if (normal_closure(G, {rep}).order() != G.order())
      return false;
  }
  return true;
}

PermGroup kernel(const Homomorphism &phi) {
  check_scan_bound(phi.source, "kernel");
  return subgroup_where(phi.source,
                        [&](const Perm &g) { return phi.map(g).is_identity(); });
}

std::pair<PermGroup, Homomorphism> quotient_group(const PermGroup &G,
                                                  const PermGroup &N) {
  if (!is_normal_in(N, G))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  if (G.order() / N.order() > kCosetBound)
    throw BoundExceeded("quotient_group: index exceeds coset bound");

  auto n_elems = std::make_shared<std::vector<Perm>>(N.elements());

  // canonical coset representative: lexicographically least element of N·r
  auto canonical = [n_elems](const Perm &r) {
    Perm best = (*n_elems)[0] * r;
    for (std::size_t i = 1; i < n_elems->size(); ++i) {
      Perm cand = (*n_elems)[i] * r;
      if (cand < best)
        best = cand;
    }
    return best;
  };

  std::vector<Perm> reps{canonical(Perm(G.degree()))};
  std::map<Perm, unsigned> index{{reps[0], 0u}};
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const Perm &g : G.generators()) {
      Perm img = canonical(reps[head] * g);
      if (!index.count(img)) {
        index.emplace(img, static_cast<unsigned>(reps.size()));
        reps.push_back(img);
      }
    }
  }

  unsigned deg = static_cast<unsigned>(reps.size());
  auto act = [reps, index, canonical, deg](const Perm &g) {
    std::vector<Point> images(deg);
    for (unsigned i = 0; i < deg; ++i)
      images[i] = index.at(canonical(reps[i] * g));
    return Perm(std::move(images));
  };

  std::vector<Perm> quot_gens;
  for (const Perm &g : G.generators())
    quot_gens.push_back(act(g));
  PermGroup Q(deg, quot_gens);

  return {Q, Homomorphism{G, Q, deg, act}};
}

Perm DirectProduct::embed_a(const Perm &a) const {
  std::vector<Point> images(degree_a + degree_b);
  for (Point i = 0; i < degree_a; ++i)
    images[i] = a[i];
  for (Point i = 0; i < degree_b; ++i)
    images[degree_a + i] = degree_a + i;
  return Perm(std::move(images));
}

Perm DirectProduct::embed_b(const Perm &b) const {
  std::vector<Point> images(degree_a + degree_b);
  for (Point i = 0; i < degree_a; ++i)
    images[i] = i;
  for (Point i = 0; i < degree_b; ++i)
    images[degree_a + i] = degree_a + b[i];
  return Perm(std::move(images));
}

Perm DirectProduct::project_a(const Perm &g) const {
  std::vector<Point> images(degree_a);
  for (Point i = 0; i < degree_a; ++i)
    images[i] = g[i];
  return Perm(std::move(images));
}

Perm DirectProduct::project_b(const Perm &g) const {
  std::vector<Point> images(degree_b);
  for (Point i = 0; i < degree_b; ++i)
    images[i] = g[degree_a + i] - degree_a;
  return Perm(std::move(images));
}

DirectProduct direct_product(const PermGroup &A, const PermGroup &B) {
  DirectProduct dp{PermGroup::trivial(1), A.degree(), B.degree()};
  std::vector<Perm> gens;
  for (const Perm &a : A.generators())
    gens.push_back(dp.embed_a(a));
  for (const Perm &b : B.generators())
    gens.push_back(dp.embed_b(b));
  dp.group = PermGroup(A.degree() + B.degree(), gens);
  return dp;
}

Perm WreathProduct::rho(const Perm &g) const {
  std::vector<Point> images(block_count);
  for (unsigned i = 0; i < block_count; ++i)
    images[i] = g[i * inner_degree] / inner_degree;
  return Perm(std::move(images));
}

Perm WreathProduct::pi(unsigned i, const Perm &g) const {
  unsigned target = g[i * inner_degree] / inner_degree;
  std::vector<Point> images(inner_degree);
  for (unsigned x = 0; x < inner_degree; ++x)
    images[x] = g[i * inner_degree + x] - target * inner_degree;
  return Perm(std::move(images));
}

Perm WreathProduct::assemble(const std::vector<Perm> &coords,
                             const Perm &sigma) const {
  std::vector<Point> images(block_count * inner_degree);
  for (unsigned i = 0; i < block_count; ++i)
    for (unsigned x = 0; x < inner_degree; ++x)
      images[i * inner_degree + x] = sigma[i] * inner_degree + coords[i][x];
  return Perm(std::move(images));
}

WreathProduct wreath_product(const PermGroup &L, const PermGroup &K) {
  WreathProduct w{PermGroup::trivial(1), K.degree(), L.degree()};
  Perm inner_id(L.degree());
  std::vector<Perm> id_coords(K.degree(), inner_id);
  std::vector<Perm> gens;
  for (unsigned i = 0; i < K.degree(); ++i)
    for (const Perm &l : L.generators()) {
      std::vector<Perm> coords = id_coords;
      coords[i] = l;
      gens.push_back(w.assemble(coords, Perm(K.degree())));
    }
  for (const Perm &k : K.generators())
    gens.push_back(w.assemble(id_coords, k));
  w.group = PermGroup(K.degree() * L.degree(), gens);
  return w;
}

} // namespace grp

#include "grp/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace grp {

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree) {
  for (const Perm &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity())
      gens_.push_back(g);
  }
  build_chain(gens_);
}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {});
}

namespace {

Point smallest_moved_point(const Perm &g) {
  for (Point i = 0; i < g.degree(); ++i)
    if (g[i] != i)
      return i;
  throw std::logic_error("identity has no moved point");
}

} // namespace

void PermGroup::recompute_level(std::size_t l,
                                const std::vector<Perm> &strong) {
  Level &lev = levels_[l];
  lev.gens.clear();
  for (const Perm &s : strong) {
    bool fixes_prefix = true;
    for (std::size_t j = 0; j < l; ++j)
      if (s[base_[j]] != base_[j]) {
        fixes_prefix = false;
        break;
      }
    if (fixes_prefix)
      lev.gens.push_back(s);
  }

  lev.orbit.clear();
  lev.in_orbit.assign(degree_, false);
  lev.transversal.assign(degree_, Perm(degree_));
  lev.orbit.push_back(static_cast<int>(lev.base_point));
  lev.in_orbit[lev.base_point] = true;
  // BFS in discovery order; generators applied in fixed order
  for (std::size_t head = 0; head < lev.orbit.size(); ++head) {
    Point pt = static_cast<Point>(lev.orbit[head]);
    for (const Perm &s : lev.gens) {
      Point img = s[pt];
      if (!lev.in_orbit[img]) {
        lev.in_orbit[img] = true;
        lev.transversal[img] = lev.transversal[pt] * s;
        lev.orbit.push_back(static_cast<int>(img));
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    if (g.is_identity())
      return {g, l};
    Point img = g[base_[l]];
    if (!levels_[l].in_orbit[img])
      return {g, l};
    g = g * levels_[l].transversal[img].inverse();
  }
  return {g, levels_.size()};
}

void PermGroup::build_chain(const std::vector<Perm> &input) {
  std::vector<Perm> strong = input;
  base_.clear();
  levels_.clear();

  auto extend_base = [&](const Perm &g) {
    base_.push_back(smallest_moved_point(g));
    levels_.push_back(Level{base_.back(), {}, {}, {}, {}});
  };

  for (const Perm &g : strong) {
    bool fixes_all = true;
    for (Point b : base_)
      if (g[b] != b) {
        fixes_all = false;
        break;
      }
    if (fixes_all)
      extend_base(g);
  }

  for (std::size_t l = 0; l < levels_.size(); ++l)
    recompute_level(l, strong);

  // close each level under Schreier generators, deepest first; a residue
  // found at level j restarts processing there
  if (!levels_.empty()) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      recompute_level(static_cast<std::size_t>(i), strong);
      const Level &lev = levels_[static_cast<std::size_t>(i)];
      bool restarted = false;
      for (int pt : lev.orbit) {
        for (const Perm &s : lev.gens) {
          Point beta = static_cast<Point>(pt);
          Perm schreier = lev.transversal[beta] * s *
                          lev.transversal[s[beta]].inverse();
          if (schreier.is_identity())
            continue;
          auto [residue, j] = strip(schreier, static_cast<std::size_t>(i) + 1);
          if (residue.is_identity())
            continue;
          strong.push_back(residue);
          if (j == levels_.size())
            extend_base(residue);
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j && l < levels_.size(); ++l)
            recompute_level(l, strong);
          i = static_cast<std::ptrdiff_t>(j);
          restarted = true;
          break;
        }
        if (restarted)
          break;
      }
      if (!restarted)
        --i;
    }
  }

  order_ = 1;
  for (const Level &lev : levels_)
    order_ *= static_cast<std::uint64_t>(lev.orbit.size());
}

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("degree mismatch in membership test");
  auto [residue, l] = strip(p, 0);
  (void)l;
  return residue.is_identity();
}

std::vector<Perm> PermGroup::elements(std::uint64_t max) const {
  if (order_ > max)
    throw std::runtime_error("group too large for element enumeration");
  std::vector<Perm> result{Perm(degree_)};
  result.reserve(order_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[l].orbit.size());
    for (const Perm &e : result)
      for (int pt : levels_[l].orbit)
        next.push_back(e * levels_[l].transversal[static_cast<Point>(pt)]);
    result = std::move(next);
  }
  return result;
}

bool PermGroup::same_group_as(const PermGroup &other) const {
  if (degree_ != other.degree_ || order_ != other.order_)
    return false;
  for (const Perm &g : gens_)
    if (!other.contains(g))
      return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup &G) const {
  if (degree_ != G.degree())
    return false;
  for (const Perm &g : gens_)
    if (!G.contains(g))
      return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i]))
        return false;
  return true;
}

RandomElements::RandomElements(const PermGroup &G, std::uint64_t seed)
    : rng_(seed) {
  if (G.generators().empty()) {
    state_.assign(1, Perm(G.degree()));
    return;
  }
  while (state_.size() < 10)
    for (const Perm &g : G.generators()) {
      state_.push_back(g);
      if (state_.size() >= 10)
        break;
    }
  for (int round = 0; round < 50; ++round)
    next();
}

Perm RandomElements::next() {
  if (state_.size() == 1)
    return state_[0];
  std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
  std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  while (j == i)
    j = pick(rng_);
  state_[i] = state_[i] * state_[j];
  return state_[i];
}

} // namespace grp

#include "grp/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grp {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("image table is not a bijection");
    seen[img] = true;
  }
}

Perm Perm::from_cycles(unsigned degree,
                       const std::vector<std::vector<unsigned>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  for (const auto &cycle : cycles) {
    for (unsigned pt : cycle) {
      if (pt < 1 || pt > degree)
        throw std::invalid_argument("cycle point out of range 1.." +
                                    std::to_string(degree));
      if (used[pt - 1])
        throw std::invalid_argument("point " + std::to_string(pt) +
                                    " repeated across cycles");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Perm(std::move(inv));
}

unsigned long long Perm::order() const {
  unsigned long long ord = 1;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned long long len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<unsigned> cycle;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

Perm operator*(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i)
    images[i] = q[p[i]];
  return Perm(std::move(images));
}

Perm conjugate(const Perm &a, const Perm &x) {
  if (a.degree() != x.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  std::vector<Point> images(a.degree());
  for (Point i = 0; i < a.degree(); ++i)
    images[x[i]] = x[a[i]];
  return Perm(std::move(images));
}

} // namespace grp

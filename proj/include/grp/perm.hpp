#ifndef GRP_PERM_HPP
#define GRP_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace grp {

using Point = unsigned;

/// A permutation of the points 0..degree-1, stored as an image table.
/// External notation (cycle strings, group files) is 1-based; everything
/// in memory is 0-based.
class Perm {
public:
  // identity of the given degree
  explicit Perm(unsigned degree);

  // from an image table; throws std::invalid_argument unless it is a bijection
  explicit Perm(std::vector<Point> images);

  // from 1-based disjoint cycles; throws on out-of-range or repeated points
  static Perm from_cycles(unsigned degree,
                          const std::vector<std::vector<unsigned>> &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  Point operator[](Point i) const { return images_[i]; }

  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;

  Perm inverse() const;

  // multiplicative order
  unsigned long long order() const;

  // nontrivial cycles, 1-based, each cycle starting at its smallest point,
  // cycles sorted by smallest point
  std::vector<std::vector<unsigned>> cycles() const;

  // cycle notation string, "()" for the identity
  std::string str() const;

  bool operator==(const Perm &other) const { return images_ == other.images_; }
  std::strong_ordering operator<=>(const Perm &other) const {
    return images_ <=> other.images_;
  }

private:
  std::vector<Point> images_;
};

// left-to-right action: i^(pq) = (i^p)^q
Perm operator*(const Perm &p, const Perm &q);

// conjugate a^x = x^-1 a x
Perm conjugate(const Perm &a, const Perm &x);

} // namespace grp

#endif

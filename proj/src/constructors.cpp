#include "grp/constructors.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace grp {

namespace {

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Conway polynomials for the extensions with p^t <= 64, as the low
// coefficients c_0..c_{t-1} of x^t + c_{t-1}x^{t-1} + ... + c_0
const std::map<unsigned, std::vector<unsigned>> kConwayLowCoeffs = {
    {4, {1, 1}},          // x^2+x+1
    {8, {1, 1, 0}},       // x^3+x+1
    {16, {1, 1, 0, 0}},   // x^4+x+1
    {32, {1, 0, 1, 0, 0}},       // x^5+x^2+1
    {64, {1, 1, 0, 1, 1, 0}},    // x^6+x^4+x^3+x+1
    {9, {2, 2}},          // x^2+2x+2
    {27, {1, 2, 0}},      // x^3+2x+1
    {25, {2, 4}},         // x^2+4x+2
    {49, {3, 6}},         // x^2+6x+3
};

std::vector<unsigned> digits(unsigned value, unsigned p, unsigned t) {
  std::vector<unsigned> d(t);
  for (unsigned i = 0; i < t; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned> &d, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    value = value * p + d[i];
  return value;
}

} // namespace

std::optional<std::pair<unsigned, unsigned>>
FiniteField::factor_prime_power(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    if (!is_prime(p))
      continue;
    if (q % p)
      continue;
    unsigned t = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++t;
    }
    if (m == 1)
      return std::make_pair(p, t);
    return std::nullopt;
  }
  return std::nullopt;
}

FiniteField FiniteField::of_order(unsigned q) {
  auto pt = factor_prime_power(q);
  if (!pt)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return FiniteField(pt->first, pt->second);
}

FiniteField::FiniteField(unsigned p, unsigned t) : p_(p), t_(t) {
  if (!is_prime(p))
    throw std::invalid_argument("characteristic must be prime");
  q_ = 1;
  for (unsigned i = 0; i < t; ++i) {
    q_ *= p;
    if (q_ > 64)
      throw std::invalid_argument("field order exceeds 64");
  }
  if (t == 0)
    throw std::invalid_argument("extension degree must be positive");

  std::vector<unsigned> reduce; // x^t = reduce(x)
  if (t > 1) {
    auto it = kConwayLowCoeffs.find(q_);
    if (it == kConwayLowCoeffs.end())
      throw std::invalid_argument("no reduction polynomial for order " +
                                  std::to_string(q_));
    reduce.resize(t);
    for (unsigned i = 0; i < t; ++i)
      reduce[i] = (p - it->second[i] % p) % p; // negate mod p
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    auto da = digits(a, p, t);
    std::vector<unsigned> dn(t);
    for (unsigned i = 0; i < t; ++i)
      dn[i] = (p - da[i]) % p;
    neg_[a] = undigits(dn, p);
    for (unsigned b = 0; b < q_; ++b) {
      auto db = digits(b, p, t);
      std::vector<unsigned> ds(t);
      for (unsigned i = 0; i < t; ++i)
        ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = undigits(ds, p);

      std::vector<unsigned> prod(2 * t - 1, 0);
      for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::size_t i = prod.size(); i-- > t;) {
        unsigned c = prod[i];
        if (c == 0)
          continue;
        prod[i] = 0;
        for (unsigned j = 0; j < t; ++j)
          prod[i - t + j] = (prod[i - t + j] + c * reduce[j]) % p;
      }
      prod.resize(t);
      mul_[a * q_ + b] = undigits(prod, p);
    }
  }

  // primitive element: x for extensions, smallest primitive root mod p
  auto mult_order = [&](unsigned a) {
    unsigned ord = 1, acc = a;
    while (acc != 1) {
      acc = mul(acc, a);
      ++ord;
    }
    return ord;
  };
  if (q_ == 2) {
    gen_ = 1;
  } else if (t > 1) {
    gen_ = p; // the residue class of x
    if (mult_order(gen_) != q_ - 1)
      throw std::logic_error("reduction polynomial is not primitive");
  } else {
    gen_ = 0;
    for (unsigned a = 2; a < q_; ++a)
      if (mult_order(a) == q_ - 1) {
        gen_ = a;
        break;
      }
  }
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return pow(a, q_ - 2);
}

unsigned FiniteField::pow(unsigned a, unsigned long long e) const {
  unsigned result = 1, base = a;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string GroupFamilySpec::name() const {
  static const char *names[] = {"sym",  "alt",  "cyclic",   "dihedral",
                                "sl2",  "psl2", "pgl2",     "pgammal2"};
  return std::string(names[static_cast<int>(family)]) + "(" +
         std::to_string(parameter) + ")";
}

std::optional<GroupFamilySpec> GroupFamilySpec::parse(const std::string &text) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    return std::nullopt;
  std::string head = text.substr(0, open);
  std::string num = text.substr(open + 1, text.size() - open - 2);
  static const std::map<std::string, Family> families = {
      {"sym", Family::Sym},           {"alt", Family::Alt},
      {"cyclic", Family::Cyclic},     {"dihedral", Family::Dihedral},
      {"sl2", Family::SL2},           {"psl2", Family::PSL2},
      {"pgl2", Family::PGL2},         {"pgammal2", Family::PGammaL2}};
  auto it = families.find(head);
  if (it == families.end() || num.empty())
    return std::nullopt;
  unsigned n = 0;
  for (char c : num) {
    if (c < '0' || c > '9')
      return std::nullopt;
    n = n * 10 + static_cast<unsigned>(c - '0');
  }
  return GroupFamilySpec{it->second, n};
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0 || n > 16)
    throw std::invalid_argument("sym: n out of range 1..16");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<Perm> gens{Perm::from_cycles(n, {{1, 2}})};
  if (n > 2) {
    std::vector<unsigned> full(n);
    for (unsigned i = 0; i < n; ++i)
      full[i] = i + 1;
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return PermGroup(n, gens);
}

PermGroup alternating_group(unsigned n) {
  if (n == 0 || n > 16)
    throw std::invalid_argument("alt: n out of range 1..16");
  if (n <= 2)
    return PermGroup::trivial(n);
  std::vector<Perm> gens;
  for (unsigned k = 3; k <= n; ++k)
    gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  return PermGroup(n, gens);
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0 || n > 128)
    throw std::invalid_argument("cyclic: n out of range 1..128");
  if (n == 1)
    return PermGroup::trivial(1);
  std::vector<unsigned> full(n);
  for (unsigned i = 0; i < n; ++i)
    full[i] = i + 1;
  return PermGroup(n, {Perm::from_cycles(n, {full})});
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3 || n > 128)
    throw std::invalid_argument("dihedral: n out of range 3..128");
  std::vector<unsigned> full(n);
  for (unsigned i = 0; i < n; ++i)
    full[i] = i + 1;
  std::vector<Point> refl(n);
  for (unsigned x = 0; x < n; ++x)
    refl[x] = (n - x) % n;
  return PermGroup(n, {Perm::from_cycles(n, {full}), Perm(refl)});
}

namespace {

using Matrix = std::array<unsigned, 4>; // row-major [[a,b],[c,d]]

// the four standard SL2 generators; redundancy is harmless
std::vector<Matrix> sl2_matrices(const FiniteField &F) {
  unsigned g = F.generator();
  std::vector<Matrix> mats;
  mats.push_back({1, 1, 0, 1});                  // transvection
  if (F.extension_degree() > 1)
    mats.push_back({1, g, 0, 1});
  mats.push_back({0, 1, F.neg(1), 0});           // Weyl element
  if (g != 1 && F.size() > 3)
    mats.push_back({g, 0, 0, F.inv(g)});         // diagonal torus generator
  return mats;
}

// action on the q^2-1 nonzero row vectors, v -> v*M
Perm matrix_perm_on_vectors(const FiniteField &F, const Matrix &m) {
  unsigned q = F.size();
  std::vector<Point> images(q * q - 1);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) {
      if (x == 0 && y == 0)
        continue;
      unsigned nx = F.add(F.mul(x, m[0]), F.mul(y, m[2]));
      unsigned ny = F.add(F.mul(x, m[1]), F.mul(y, m[3]));
      images[x * q + y - 1] = nx * q + ny - 1;
    }
  return Perm(std::move(images));
}

// Projective line points ordered ∞, 0, 1, g, g^2, ..., g^(q-2).
// index <-> [x:y]: 0 is [1:0]; a nonzero z=x/y has index 1 for z=0 wait:
// index 1 is z=0, index 2+j is z=g^j.
struct ProjectiveLine {
  const FiniteField &F;
  std::vector<unsigned> log; // log[z] for z != 0

  explicit ProjectiveLine(const FiniteField &f) : F(f), log(f.size(), 0) {
    unsigned acc = 1;
    for (unsigned j = 0; j + 1 < F.size(); ++j) {
      log[acc] = j;
      acc = F.mul(acc, F.generator());
    }
  }

  unsigned degree() const { return F.size() + 1; }

  unsigned index_of(bool infinite, unsigned z) const {
    if (infinite)
      return 0;
    return z == 0 ? 1 : 2 + log[z];
  }

  unsigned value_at(unsigned idx, bool *infinite) const {
    if (idx == 0) {
      *infinite = true;
      return 0;
    }
    *infinite = false;
    return idx == 1 ? 0u : F.pow(F.generator(), idx - 2);
  }

  // [x:y] -> [x:y]M, as a permutation of the q+1 points
  Perm moebius(const Matrix &m) const {
    std::vector<Point> images(degree());
    for (unsigned idx = 0; idx < degree(); ++idx) {
      bool inf;
      unsigned z = value_at(idx, &inf);
      unsigned x = inf ? 1 : z, y = inf ? 0 : 1;
      unsigned nx = F.add(F.mul(x, m[0]), F.mul(y, m[2]));
      unsigned ny = F.add(F.mul(x, m[1]), F.mul(y, m[3]));
      images[idx] = ny == 0 ? index_of(true, 0)
                            : index_of(false, F.mul(nx, F.inv(ny)));
    }
    return Perm(std::move(images));
  }

  Perm frobenius() const {
    std::vector<Point> images(degree());
    for (unsigned idx = 0; idx < degree(); ++idx) {
      bool inf;
      unsigned z = value_at(idx, &inf);
      images[idx] = inf ? 0 : index_of(false, F.frobenius(z));
    }
    return Perm(std::move(images));
  }
};

PermGroup linear_group(Family family, unsigned q) {
  auto pt = FiniteField::factor_prime_power(q);
  if (!pt || q < 2 || q > 64)
    throw std::invalid_argument("linear families need a prime power q in 2..64");
  FiniteField F(pt->first, pt->second);

  if (family == Family::SL2) {
    std::vector<Perm> gens;
    for (const Matrix &m : sl2_matrices(F))
      gens.push_back(matrix_perm_on_vectors(F, m));
    return PermGroup(q * q - 1, gens);
  }

  ProjectiveLine line(F);
  std::vector<Perm> gens;
  for (const Matrix &m : sl2_matrices(F))
    gens.push_back(line.moebius(m));
  if (family == Family::PGL2 || family == Family::PGammaL2)
    if (F.generator() != 1)
      gens.push_back(line.moebius({F.generator(), 0, 0, 1}));
  if (family == Family::PGammaL2 && F.extension_degree() > 1)
    gens.push_back(line.frobenius());
  return PermGroup(line.degree(), gens);
}

} // namespace

FamilyGroup make_group(const GroupFamilySpec &spec) {
  switch (spec.family) {
  case Family::Sym:
    return {spec, symmetric_group(spec.parameter)};
  case Family::Alt:
    return {spec, alternating_group(spec.parameter)};
  case Family::Cyclic:
    return {spec, cyclic_group(spec.parameter)};
  case Family::Dihedral:
    return {spec, dihedral_group(spec.parameter)};
  default:
    return {spec, linear_group(spec.family, spec.parameter)};
  }
}

FamilyGroup aut_overgroup(const FamilyGroup &S) {
  switch (S.spec.family) {
  case Family::Alt:
    if (S.spec.parameter == 6)
      throw std::invalid_argument(
          "alt(6) has an exceptional outer automorphism group; not supported");
    if (S.spec.parameter < 4)
      throw std::invalid_argument("aut_overgroup: alt(n) needs n >= 4");
    return make_group({Family::Sym, S.spec.parameter});
  case Family::PSL2:
    if (S.spec.parameter < 4)
      throw std::invalid_argument("aut_overgroup: psl2(q) needs q >= 4");
    return make_group({Family::PGammaL2, S.spec.parameter});
  default:
    throw std::invalid_argument("no automorphism overgroup for family " +
                                S.spec.name());
  }
}

} // namespace grp

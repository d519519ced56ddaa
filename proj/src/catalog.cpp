#include "grp/catalog.hpp"

#include "grp/constructors.hpp"
#include "grp/group_ops.hpp"

namespace grp {

namespace {

void add_family(std::vector<CatalogEntry> &out, Family family,
                unsigned parameter) {
  GroupFamilySpec spec{family, parameter};
  out.push_back({spec.name(), make_group(spec).group});
}

void add_abelian_product(std::vector<CatalogEntry> &out, unsigned m,
                         unsigned n) {
  out.push_back({"cyclic(" + std::to_string(m) + ") x cyclic(" +
                     std::to_string(n) + ")",
                 direct_product(cyclic_group(m), cyclic_group(n)).group});
}

void add_wreath(std::vector<CatalogEntry> &out, Family family,
                unsigned parameter) {
  GroupFamilySpec spec{family, parameter};
  out.push_back({spec.name() + " wr cyclic(2)",
                 wreath_product(make_group(spec).group, symmetric_group(2))
                     .group});
}

} // namespace

std::vector<CatalogEntry> catalog(CatalogSweep sweep) {
  std::vector<CatalogEntry> out;

  for (unsigned n : {2u, 3u, 4u, 6u, 8u, 9u, 12u})
    add_family(out, Family::Cyclic, n);
  add_abelian_product(out, 2, 2);
  add_abelian_product(out, 2, 4);
  add_abelian_product(out, 3, 3);
  for (unsigned n = 3; n <= 10; ++n)
    add_family(out, Family::Dihedral, n);
  add_family(out, Family::Sym, 3);
  add_family(out, Family::Sym, 4);
  add_family(out, Family::Sym, 5);
  add_family(out, Family::Sym, 6);
  add_family(out, Family::Alt, 4);
  add_family(out, Family::Alt, 5);
  add_family(out, Family::Alt, 6);
  add_family(out, Family::SL2, 3);
  add_family(out, Family::SL2, 5);
  add_family(out, Family::PSL2, 7);
  add_family(out, Family::PGL2, 5);

  if (sweep == CatalogSweep::Small)
    return out;

  add_family(out, Family::PSL2, 4);
  add_family(out, Family::PSL2, 5);
  add_family(out, Family::PSL2, 8);
  add_family(out, Family::PSL2, 9);
  add_family(out, Family::PSL2, 11);
  add_family(out, Family::PGL2, 7);
  add_family(out, Family::PGL2, 9);
  add_family(out, Family::PGammaL2, 8);
  add_family(out, Family::PGammaL2, 9);
  add_wreath(out, Family::Alt, 5);

  if (sweep == CatalogSweep::Families)
    return out;

  add_wreath(out, Family::Sym, 5);
  add_family(out, Family::PGammaL2, 32);
  return out;
}

} // namespace grp

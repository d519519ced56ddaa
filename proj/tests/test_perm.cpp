#include "doctest.h"

#include <stdexcept>

#include "grp/perm.hpp"
#include "test_util.hpp"

using namespace grp;
using testutil::cyc;

TEST_CASE("identity and construction") {
  Perm id(4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);
  CHECK(id.str() == "()");

  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3}), std::invalid_argument);
}

TEST_CASE("composition is left-to-right") {
  // (1 2) then identity
  CHECK(cyc(3, {{1, 2}}) * Perm(3) == cyc(3, {{1, 2}}));

  // (1 2) * (2 3): 1->2->3, 2->1->1, 3->3->2, i.e. (1 3 2)
  CHECK(cyc(3, {{1, 2}}) * cyc(3, {{2, 3}}) == cyc(3, {{1, 3, 2}}));

  Perm p = cyc(5, {{1, 2, 3, 4, 5}});
  CHECK((p * p.inverse()).is_identity());

  CHECK_THROWS_AS(Perm(2) * Perm(3), std::invalid_argument);
}

TEST_CASE("inverse composes to identity on all points") {
  Perm p = cyc(6, {{1, 4}, {2, 5, 6}});
  Perm q = p * p.inverse();
  for (Point i = 0; i < 6; ++i)
    CHECK(q[i] == i);
}

TEST_CASE("conjugation is a^x = x^-1 a x") {
  Perm a = cyc(4, {{1, 2}});
  Perm x = cyc(4, {{1, 3}});
  CHECK(conjugate(a, x) == x.inverse() * a * x);
  CHECK(conjugate(a, x) == cyc(4, {{2, 3}}));
}

TEST_CASE("order and cycles") {
  CHECK(Perm(5).order() == 1);
  CHECK(cyc(5, {{1, 2, 3, 4, 5}}).order() == 5);
  CHECK(cyc(6, {{1, 2}, {3, 4, 5}}).order() == 6);
  CHECK(cyc(6, {{1, 2}, {3, 4, 5}}).str() == "(1 2)(3 4 5)");
}

TEST_CASE("from_cycles rejects bad input") {
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, {{1, 1}}), std::invalid_argument);
}

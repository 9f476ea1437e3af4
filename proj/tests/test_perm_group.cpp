#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sigma/corpus.hpp"
#include "sigma/errors.hpp"
#include "sigma/perm.hpp"
#include "sigma/perm_group.hpp"

using namespace sigma;

TEST_CASE("orders of the standard families") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(7).order() == 14);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
  CHECK(quaternion_group().order() == 8);
  CHECK(elementary_abelian_group(2, 3).order() == 8);
  CHECK(elementary_abelian_group(3, 2).order() == 9);
  CHECK(special_linear_2_3().order() == 24);
  CHECK(projective_special_linear_2_7().order() == 168);
}

TEST_CASE("products and extensions") {
  CHECK(direct_product(cyclic_group(2), symmetric_group(3)).order() == 12);
  CHECK(direct_product(cyclic_group(3), cyclic_group(3)).order() == 9);
  // C7 : C3 (Frobenius group of order 21), faithful on 7 points
  PermGroup f21 = semidirect_cyclic(7, 2, 3);
  CHECK(f21.order() == 21);
  CHECK(f21.degree() == 7);
  // C5 : C4 with the order-2 action needs the auxiliary block
  PermGroup dic = semidirect_cyclic(5, 4, 4);
  CHECK(dic.order() == 20);
  CHECK(dic.degree() == 9);
  // (7, 3, 2): V = F_7^2 under C_3 : C_2, the order-294 reference group
  PermGroup m = module_extension(7, 3, 2);
  CHECK(m.order() == 294);
}

TEST_CASE("reference groups match their published shape") {
  PermGroup g42 = example_group_42();
  CHECK(g42.order() == 42);
  PermGroup g294 = example_group_294();
  CHECK(g294.order() == 294);
}

TEST_CASE("membership testing") {
  PermGroup a4 = alternating_group(4);
  CHECK(a4.contains(Permutation::from_cycles("(0 1 2)", 4)));
  CHECK(a4.contains(Permutation::from_cycles("(0 1)(2 3)", 4)));
  CHECK_FALSE(a4.contains(Permutation::from_cycles("(0 1)", 4)));
  CHECK(a4.contains(Permutation(4)));

  PermGroup t = PermGroup::trivial(4);
  CHECK(t.order() == 1);
  CHECK(t.contains(Permutation(4)));
  CHECK_FALSE(t.contains(Permutation::from_cycles("(0 1)", 4)));
}

TEST_CASE("element enumeration matches the stabilizer-chain order") {
  PermGroup s4 = symmetric_group(4);
  auto elems = s4.elements();
  CHECK(elems.size() == 24);
  for (auto const &p : elems)
    CHECK(s4.contains(p));
  // closure under product, spot-checked on a generator
  Permutation g = Permutation::from_cycles("(0 1 2 3)", 4);
  for (auto const &p : elems)
    CHECK(s4.contains(p * g));
}

TEST_CASE("constructor preconditions are enforced") {
  CHECK_THROWS_AS(semidirect_cyclic(5, 2, 3), Error); // 2^3 != 1 mod 5
  CHECK_THROWS_AS(semidirect_cyclic(4, 2, 2), Error); // gcd(2, 4) != 1
  CHECK_THROWS_AS(module_extension(5, 3, 2), Error);  // 3 does not divide 4
  CHECK_THROWS_AS(cyclic_group(0), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "sigma/corpus.hpp"
#include "sigma/perm.hpp"
#include "sigma/subgroup_ops.hpp"
#include "sigma/universe.hpp"

using namespace sigma;

namespace {

Subgroup by_gens(std::shared_ptr<Universe const> const &u,
                 std::initializer_list<char const *> cycles) {
  std::vector<Permutation> gens;
  for (auto const *c : cycles)
    gens.push_back(Permutation::from_cycles(c, u->degree()));
  return Subgroup::generated_by(u, gens);
}

} // namespace

TEST_CASE("normality, normalizer, centralizer and core on S4") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(u);
  Subgroup v4 = by_gens(u, {"(0 1)(2 3)", "(0 2)(1 3)"});
  Subgroup c2 = by_gens(u, {"(0 1)"});
  Subgroup s3 = by_gens(u, {"(1 2 3)", "(1 2)"});

  CHECK(is_normal_in(v4, G));
  CHECK_FALSE(is_normal_in(c2, G));
  CHECK(normalizer(G, v4) == G);
  CHECK(normalizer(G, s3) == s3);      // S3 is self-normalizing in S4
  CHECK(centralizer(G, G).order() == 1); // trivial center
  CHECK(core(G, s3).is_trivial());
  CHECK(core(G, v4) == v4);
  CHECK(normal_closure(G, c2) == G);   // transpositions generate S4
}

TEST_CASE("intersection and join are lattice operations") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup a4 = by_gens(u, {"(0 1 2)", "(0 1)(2 3)"});
  Subgroup d8 = by_gens(u, {"(0 1 2 3)", "(0 2)"});
  Subgroup meet = intersection(a4, d8);
  CHECK(meet.order() == 4); // the Klein subgroup inside both
  Subgroup wedge = join(a4, d8);
  CHECK(wedge.is_full());
  CHECK(a4.contains(meet));
  CHECK(d8.contains(meet));
}

TEST_CASE("frattini subgroups of small groups") {
  auto s4 = Universe::make(symmetric_group(4));
  CHECK(frattini(Subgroup::full(s4)).is_trivial());

  auto d8 = Universe::make(dihedral_group(4));
  CHECK(frattini(Subgroup::full(d8)).order() == 2);

  auto c4 = Universe::make(cyclic_group(4));
  CHECK(frattini(Subgroup::full(c4)).order() == 2);

  auto q8 = Universe::make(quaternion_group());
  CHECK(frattini(Subgroup::full(q8)).order() == 2);
}

TEST_CASE("quotients act faithfully on cosets") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(u);
  Subgroup v4 = by_gens(u, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto q = quotient(G, v4);
  Subgroup qfull = Subgroup::full(q->q_universe);
  CHECK(qfull.order() == 6);
  CHECK_FALSE(is_abelian(qfull)); // S4 / V4 is S3

  Subgroup a4 = by_gens(u, {"(0 1 2)", "(0 1)(2 3)"});
  CHECK(q->image_of(a4).order() == 3);
  CHECK(q->preimage_of(q->image_of(a4)) == a4);

  // image of any subgroup has order |S V4| / |V4|
  for (auto id : u->subgroups_below(G.id())) {
    Subgroup s(u, id);
    Subgroup img = q->image_of(s);
    CHECK(img.order() == join(s, v4).order() / 4);
  }
}

TEST_CASE("chief series of S4 and its factor orders") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(u);
  auto series = chief_series(G);
  REQUIRE(series.size() == 4);
  CHECK(series.front().is_trivial());
  CHECK(series.back().is_full());
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    CHECK(series[i + 1].contains(series[i]));
    CHECK(is_normal_in(series[i], G));
  }
  CHECK(chief_factor_orders(G) == std::vector<std::uint64_t>{4, 3, 2});
}

TEST_CASE("chief factor multiset is series-independent") {
  // Jordan-Hoelder: the factor multiset must not depend on the choice of
  // minimal normal subgroup at each step
  for (auto const &g :
       {symmetric_group(4), dihedral_group(6), special_linear_2_3(),
        direct_product(cyclic_group(6), cyclic_group(10)),
        semidirect_cyclic(7, 2, 3), module_extension(7, 3, 2)}) {
    auto u = Universe::make(g);
    Subgroup G = Subgroup::full(u);
    auto a = chief_factor_orders(G);
    auto series = chief_series(G, true); // prefer the largest candidate
    std::vector<std::uint64_t> b;
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
      b.push_back(series[i + 1].order() / series[i].order());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("subnormality in S4 and A5") {
  auto s4 = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(s4);
  Subgroup c2m = by_gens(s4, {"(0 1)(2 3)"}); // inside V4, subnormal depth 2
  Subgroup c2 = by_gens(s4, {"(0 1)"});
  CHECK(is_subnormal(c2m, G));
  CHECK_FALSE(is_subnormal(c2, G));

  auto a5 = Universe::make(alternating_group(5));
  Subgroup A = Subgroup::full(a5);
  for (auto id : a5->subgroups_below(A.id())) {
    Subgroup s(a5, id);
    // simple group: only 1 and A5 itself are subnormal
    CHECK(is_subnormal(s, A) == (s.is_trivial() || s.is_full()));
  }
}

TEST_CASE("nilpotency and abelianness classify small groups") {
  CHECK(is_abelian(Subgroup::full(Universe::make(cyclic_group(12)))));
  CHECK(is_nilpotent(Subgroup::full(Universe::make(quaternion_group()))));
  CHECK(is_nilpotent(Subgroup::full(Universe::make(dihedral_group(4)))));
  CHECK_FALSE(is_nilpotent(Subgroup::full(Universe::make(dihedral_group(5)))));
  CHECK_FALSE(is_abelian(Subgroup::full(Universe::make(quaternion_group()))));
  CHECK(is_nilpotent(Subgroup::full(Universe::make(
      direct_product(cyclic_group(4), elementary_abelian_group(3, 1))))));
}

TEST_CASE("maximal and minimal normal subgroups") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(u);
  auto maxes = maximal_subgroups(G);
  std::multiset<std::uint64_t> orders;
  for (auto const &m : maxes)
    orders.insert(m.order());
  CHECK(orders == std::multiset<std::uint64_t>{6, 6, 6, 6, 8, 8, 8, 12});
  auto mins = minimal_normal_subgroups(G);
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().order() == 4);
}

TEST_CASE("conjugates_under covers the whole class") {
  auto u = Universe::make(symmetric_group(4));
  Subgroup G = Subgroup::full(u);
  Subgroup s3 = by_gens(u, {"(1 2 3)", "(1 2)"});
  auto conj = conjugates_under(s3, G);
  CHECK(conj.size() == 4);
  for (auto const &c : conj)
    CHECK(c.order() == 6);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pqsurf/group.hpp"

using namespace pqsurf;

namespace {

PermGroup klein() {
  return PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                Perm::from_cycles(4, {{0, 2}, {1, 3}})});
}

PermGroup s3() {
  return PermGroup::closure(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})});
}

PermGroup cyclic(int n) {
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
  return PermGroup::closure(n, {Perm::from_cycles(n, {cyc})});
}

}  // namespace

TEST_CASE("closure basics") {
  auto c2 = PermGroup::closure(2, {Perm::from_cycles(2, {{0, 1}})});
  CHECK(c2.order() == 2);

  auto c4 = cyclic(4);
  CHECK(c4.order() == 4);

  // Klein group: brute-force closure by hand gives 4 elements
  auto v4 = klein();
  CHECK(v4.order() == 4);
  for (int i = 0; i < v4.order(); ++i)
    if (i != v4.identity()) CHECK(v4.elt_order(i) == 2);
}

TEST_CASE("closure bound error") {
  std::vector<int> cyc(30);
  for (int i = 0; i < 30; ++i) cyc[static_cast<std::size_t>(i)] = i;
  CHECK_THROWS_WITH_AS(PermGroup::closure(30, {Perm::from_cycles(30, {cyc})}, 10),
                       "group too large", std::runtime_error);
}

TEST_CASE("element orders") {
  auto c4 = cyclic(4);
  CHECK(c4.elt_order(c4.identity()) == 1);
  auto four_cycle = c4.index_of(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(c4.elt_order(four_cycle) == 4);

  auto v4 = klein();
  auto dbl = v4.index_of(Perm::from_cycles(4, {{0, 1}, {2, 3}}));
  CHECK(v4.elt_order(dbl) == 2);
}

TEST_CASE("closure property and Lagrange, exhaustive") {
  for (const auto& g : {klein(), s3(), cyclic(6)}) {
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.order() % g.elt_order(a) == 0);
      for (int b = 0; b < g.order(); ++b) {
        int c = g.mul(a, b);
        CHECK(c >= 0);
        CHECK(c < g.order());
      }
    }
  }
}

TEST_CASE("canonical element ordering is lexicographic") {
  auto g = s3();
  for (int i = 0; i + 1 < g.order(); ++i) CHECK(g.elt(i) < g.elt(i + 1));
  CHECK(g.identity() == 0);  // identity is lexicographically first
}

TEST_CASE("conjugacy closure") {
  auto g = s3();

  // {identity} stays put
  auto triv = g.conjugacy_closure({g.identity()});
  CHECK(triv.size() == 1);

  // a transposition pulls in all transpositions and the identity (via squares)
  auto t = g.index_of(Perm::from_cycles(3, {{0, 1}}));
  auto cc = g.conjugacy_closure({t});
  CHECK(cc.size() == 4);  // e, (01), (02), (12) -- brute force over 6 conjugators
  std::set<int> orders;
  for (int x : cc) orders.insert(g.elt_order(x));
  CHECK(orders == std::set<int>{1, 2});

  // cyclic group: powers of a generator give the whole group
  auto c4 = cyclic(4);
  auto gen = c4.index_of(Perm::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(c4.conjugacy_closure({gen}).size() == 4);

  // fixed point of one more closure pass
  auto cc2 = g.conjugacy_closure(cc);
  CHECK(cc2 == cc);
}

TEST_CASE("automorphisms") {
  // (Z/5)* has order 4
  CHECK(automorphisms(cyclic(5)).size() == 4);

  // Klein group: brute force over assignments of the 3 involutions gives 6
  CHECK(automorphisms(klein()).size() == 6);

  // S3: 6 automorphisms, all inner
  auto g = s3();
  auto auts = automorphisms(g);
  CHECK(auts.size() == 6);
  for (const auto& a : auts) {
    bool inner = false;
    for (int c = 0; c < g.order() && !inner; ++c) {
      bool match = true;
      for (int x = 0; x < g.order(); ++x)
        if (a.map[static_cast<std::size_t>(x)] != g.conj(c, x)) {
          match = false;
          break;
        }
      inner = match;
    }
    CHECK(inner);
  }
}

TEST_CASE("automorphism set forms a group under composition") {
  for (const auto& g : {klein(), s3(), cyclic(8)}) {
    auto auts = automorphisms(g);
    std::set<std::vector<int>> maps;
    for (const auto& a : auts) maps.insert(a.map);

    // identity present
    std::vector<int> id(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) id[static_cast<std::size_t>(i)] = i;
    CHECK(maps.count(id) == 1);

    for (const auto& a : auts) {
      // inverse present
      std::vector<int> inv(static_cast<std::size_t>(g.order()));
      for (int i = 0; i < g.order(); ++i) inv[static_cast<std::size_t>(a.map[static_cast<std::size_t>(i)])] = i;
      CHECK(maps.count(inv) == 1);
      // closed under composition
      for (const auto& b : auts) {
        std::vector<int> comp(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i)
          comp[static_cast<std::size_t>(i)] = b.map[static_cast<std::size_t>(a.map[static_cast<std::size_t>(i)])];
        CHECK(maps.count(comp) == 1);
      }
    }
  }
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(is_isomorphic(cyclic(4), klein()));

  // two degree-distinct realizations of S3
  auto s3_deg3 = s3();
  auto s3_deg5 = PermGroup::closure(
      5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2}})});
  CHECK(s3_deg5.order() == 6);
  CHECK(is_isomorphic(s3_deg3, s3_deg5));

  // D4 vs Q8: involution counts 5 vs 1
  auto d4 = PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}),
                                   Perm::from_cycles(4, {{0, 2}})});
  // Q8 by left multiplication on {1,i,-1,-i,j,k,-j,-k}
  auto q8 = PermGroup::closure(8, {Perm::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                   Perm::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
  CHECK(d4.order() == 8);
  CHECK(q8.order() == 8);
  CHECK(q8.elements_of_order(2).size() == 1);
  CHECK_FALSE(is_isomorphic(d4, q8));
}

TEST_CASE("subgroup closure and generates") {
  auto g = s3();
  auto t = g.index_of(Perm::from_cycles(3, {{0, 1}}));
  auto r = g.index_of(Perm::from_cycles(3, {{0, 1, 2}}));
  CHECK(g.subgroup_closure({t}).size() == 2);
  CHECK(g.subgroup_closure({r}).size() == 3);
  CHECK(g.generates({t, r}));
  CHECK_FALSE(g.generates({r}));
}

TEST_CASE("center and derived subgroup") {
  auto g = s3();
  CHECK(g.center().size() == 1);
  CHECK(g.derived_subgroup().size() == 3);
  auto v4 = klein();
  CHECK(v4.center().size() == 4);
  CHECK(v4.derived_subgroup().size() == 1);
}

TEST_CASE("index two subgroups") {
  auto g = s3();
  auto subs = g.index_two_subgroups();
  CHECK(subs.size() == 1);
  CHECK(subs[0].size() == 3);

  auto v4 = klein();
  CHECK(v4.index_two_subgroups().size() == 3);

  // A4 has none
  auto a4 = PermGroup::closure(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Perm::from_cycles(4, {{0, 1, 2}})});
  CHECK(a4.order() == 12);
  CHECK(a4.index_two_subgroups().empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqsurf/presentation.hpp"

using namespace pqsurf;

namespace {

Presentation pres(int n_gens, const std::vector<std::string>& rels) {
  Presentation p;
  p.n_gens = n_gens;
  for (const auto& r : rels) p.relators.push_back(parse_word(r, n_gens));
  return p;
}

}  // namespace

TEST_CASE("word parsing") {
  auto w = parse_word("x4", 2);
  CHECK(w == std::vector<int>{0, 0, 0, 0});
  auto v = parse_word("yxy-1x-3", 2);
  CHECK(v == std::vector<int>{1, 0, -2, -1, -1, -1});
  CHECK(word_to_string(v) == "yxy-1x-3");
  CHECK_THROWS(parse_word("q2", 2));
  CHECK_THROWS(parse_word("z2", 2));  // only 2 generators available
}

TEST_CASE("cyclic group of order 3") {
  auto g = realize(pres(1, {"x3"}));
  CHECK(g.order() == 3);
  CHECK(g.degree() == 3);
}

TEST_CASE("dihedral of order 8 via hand coset enumeration oracle") {
  auto g = realize(pres(2, {"x4", "y2", "yxyx"}));
  CHECK(g.order() == 8);
  // 5 involutions, elements of order 4 exist
  CHECK(g.elements_of_order(2).size() == 5);
  CHECK(g.elements_of_order(4).size() == 2);
}

TEST_CASE("semidihedral group of order 16") {
  // x2, y8, xyx-1y-3: order must be 16
  auto g = realize(pres(2, {"x2", "y8", "xyx-1y-3"}));
  CHECK(g.order() == 16);
  CHECK(g.elements_of_order(8).size() == 4);
}

TEST_CASE("quaternion group") {
  auto g = realize(pres(2, {"x4", "x2y-2", "yxy-1x"}));
  CHECK(g.order() == 8);
  CHECK(g.elements_of_order(2).size() == 1);
}

TEST_CASE("trivial and small presentations") {
  CHECK(realize(pres(1, {"x"})).order() == 1);
  CHECK(realize(pres(1, {"x2"})).order() == 2);
  CHECK(realize(pres(2, {"x2", "y3", "xyxyxy"})).order() == 12);  // A4
}

TEST_CASE("S4 presentation") {
  auto g = realize(pres(2, {"x2", "y4", "xyxyxy"}));
  CHECK(g.order() == 24);
  CHECK(g.elements_of_order(4).size() == 6);
  CHECK(g.elements_of_order(3).size() == 8);
}

TEST_CASE("realize satisfies every relator") {
  auto p = pres(2, {"x4", "y2", "yxyx"});
  auto g = realize(p);
  for (const auto& rel : p.relators) {
    Perm w = Perm::identity(g.degree());
    for (int s : rel) {
      const Perm& base = g.gens()[static_cast<std::size_t>(s >= 0 ? s : -s - 1)];
      w = w * (s >= 0 ? base : base.inverse());
    }
    CHECK(w.is_identity());
  }
}

TEST_CASE("coset ceiling error") {
  // infinite group: free product Z/2 * Z/3 (the modular group image)
  CHECK_THROWS_AS(realize(pres(2, {"x2", "y3"}), 200), std::runtime_error);
}

TEST_CASE("binary tetrahedral presentation gives SL(2,3)") {
  // A3 = B3 = (AB)2 as relators A3B-3 and B3(AB)-2
  auto g = realize(pres(2, {"x3y-3", "y3y-1x-1y-1x-1"}));
  CHECK(g.order() == 24);
  CHECK(g.elements_of_order(2).size() == 1);  // unique involution: -I
}

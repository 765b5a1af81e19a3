#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "isoprod/todd_coxeter.hpp"

using namespace isoprod;

namespace {

GroupWord comm(int a, int b) {  // a^-1 b^-1 a b
  GroupWord w;
  w.append(a, -1).append(b, -1).append(a, 1).append(b, 1);
  return w;
}

}  // namespace

TEST_CASE("cyclic group") {
  Presentation p;
  p.ngens = 1;
  p.relators.push_back(GroupWord::power(0, 4));
  auto [g, hom] = realize_presentation(p);
  hom.target = &g;
  CHECK(g.order() == 4);
  CHECK(g.element_order(hom.images[0]) == 4);
  g.check_axioms();
}

TEST_CASE("quaternion group") {
  // <a, b | a^4, a^2 b^-2, b^-1 a b a>
  Presentation p;
  p.ngens = 2;
  p.relators.push_back(GroupWord::power(0, 4));
  p.relators.push_back(GroupWord::power(0, 2).append(GroupWord::power(1, -2)));
  GroupWord r;
  r.append(1, -1).append(0, 1).append(1, 1).append(0, 1);
  p.relators.push_back(r);
  auto [g, hom] = realize_presentation(p);
  hom.target = &g;
  CHECK(g.order() == 8);
  for (const auto& rel : p.relators) CHECK(hom.eval(rel) == g.identity());
}

TEST_CASE("order-16 group from its presentation") {
  // <x,y,z | x^4, y^2, z^2, [x,y], [y,z], [z,x] y>
  Presentation p;
  p.ngens = 3;
  p.relators.push_back(GroupWord::power(0, 4));
  p.relators.push_back(GroupWord::power(1, 2));
  p.relators.push_back(GroupWord::power(2, 2));
  p.relators.push_back(comm(0, 1));
  p.relators.push_back(comm(1, 2));
  p.relators.push_back(comm(2, 0).append(1, 1));
  auto [g, hom] = realize_presentation(p);
  hom.target = &g;
  CHECK(g.order() == 16);
  for (const auto& rel : p.relators) CHECK(hom.eval(rel) == g.identity());
  CHECK(center(g).size() == 4);
  CHECK(!g.is_abelian());
}

TEST_CASE("order-32 group from its presentation") {
  Presentation p;
  p.ngens = 5;
  for (int i = 0; i < 5; ++i) p.relators.push_back(GroupWord::power(i, 2));
  p.relators.push_back(comm(0, 1).append(3, 1));
  p.relators.push_back(comm(0, 2).append(4, 1));
  for (auto [j, k] : {std::pair{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                      {2, 3}, {2, 4}, {3, 4}})
    p.relators.push_back(comm(j, k));
  auto [g, hom] = realize_presentation(p);
  hom.target = &g;
  CHECK(g.order() == 32);
  for (const auto& rel : p.relators) CHECK(hom.eval(rel) == g.identity());
  CHECK(center(g).size() == 4);
}

TEST_CASE("trivial and free cases") {
  Presentation empty;
  auto [g, hom] = realize_presentation(empty);
  CHECK(g.order() == 1);

  // free group of rank 1 exceeds any cap
  Presentation free1;
  free1.ngens = 1;
  CHECK_THROWS_AS(realize_presentation(free1, 100), ResourceError);
}

TEST_CASE("deterministic realization") {
  Presentation p;
  p.ngens = 2;
  p.relators.push_back(GroupWord::power(0, 3));
  p.relators.push_back(GroupWord::power(1, 2));
  GroupWord r;  // (xy)^2
  r.append(0, 1).append(1, 1).append(0, 1).append(1, 1);
  p.relators.push_back(r);
  auto [g1, h1] = realize_presentation(p);
  auto [g2, h2] = realize_presentation(p);
  CHECK(g1.order() == 6);
  CHECK(h1.images == h2.images);
}

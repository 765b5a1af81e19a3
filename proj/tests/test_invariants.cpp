#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "isoprod/families.hpp"
#include "isoprod/invariants.hpp"

using namespace isoprod;

TEST_CASE("Riemann-Hurwitz genus") {
  auto beauville = realize_family("beauville");
  CHECK(curve_genus(beauville->v1) == 6);  // 2g-2 = 25(-2 + 3*4/5) = 10
  CHECK(curve_genus(beauville->v2) == 6);

  auto z2p3 = realize_family("z2p3");
  CHECK(curve_genus(z2p3->v1) == 3);  // 2g-2 = 8(-2 + 5/2) = 4
  CHECK(curve_genus(z2p3->v2) == 5);  // 2g-2 = 8(-2 + 3) = 8

  auto trivial = group_from_permutations(1, {});
  GeneratingVector v;
  v.group = &trivial.group;
  v.base_genus = 2;
  v.hyperbolic_part = {0, 0, 0, 0};
  CHECK(curve_genus(v) == 2);
}

TEST_CASE("genus is monotone in branch count") {
  FiniteGroup g = group_from_abelian_invariants({2, 2});
  GeneratingVector v;
  v.group = &g;
  v.base_genus = 1;
  v.hyperbolic_part = {1, 2};
  int prev = curve_genus(v);
  for (int extra = 0; extra < 4; ++extra) {
    v.branch_part.push_back(3);
    v.branch_part.push_back(3);  // keep the product trivial
    int cur = curve_genus(v);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("inconsistent data rejected") {
  // |G| = 2, genus 0, one branch point of order 2: 2g-2 = 2(-2 + 1/2) = -3
  FiniteGroup g = group_from_abelian_invariants({2});
  GeneratingVector v;
  v.group = &g;
  v.base_genus = 0;
  v.branch_part = {1};
  CHECK_THROWS_AS(curve_genus(v), DatumError);
}

TEST_CASE("surface invariants of the Beauville surface") {
  auto d = realize_family("beauville");
  auto inv = surface_invariants(d->group, d->v1, d->v2);
  CHECK(inv.g1 == 6);
  CHECK(inv.g2 == 6);
  CHECK(inv.chi == 1);
  CHECK(inv.q == 0);
  CHECK(inv.p_g == 0);
  CHECK(inv.Ksq == 8);
  CHECK(inv.e == 4);
}

TEST_CASE("all families have chi=1, q=0, p_g=0, K^2=8") {
  for (const auto& info : family_table()) {
    CAPTURE(info.name);
    auto d = realize_family(info.name);
    auto inv = surface_invariants(d->group, d->v1, d->v2);
    CHECK(inv.chi == 1);
    CHECK(inv.q == 0);
    CHECK(inv.p_g == 0);
    CHECK(inv.Ksq == 8);
    CHECK(inv.e == 4);
  }
}

TEST_CASE("non-free actions rejected") {
  auto d = realize_family("beauville");
  CHECK_THROWS_AS(surface_invariants(d->group, d->v1, d->v1), UsageError);
}

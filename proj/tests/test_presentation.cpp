#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "isoprod/families.hpp"
#include "isoprod/presentation.hpp"

using namespace isoprod;

namespace {

GeneratingVector abelian_vec(const FiniteGroup& g, const std::vector<int>& factors,
                             const std::vector<std::vector<int>>& coords) {
  GeneratingVector v;
  v.group = &g;
  v.base_genus = 0;
  for (auto c = coords.begin(); c != coords.end(); ++c) {
    std::vector<int> red = *c;
    for (size_t i = 0; i < red.size(); ++i)
      red[i] = ((red[i] % factors[i]) + factors[i]) % factors[i];
    v.branch_part.push_back(abelian_index(factors, red));
  }
  return v;
}

}  // namespace

TEST_CASE("validate the Beauville vectors") {
  FiniteGroup g = group_from_abelian_invariants({5, 5});
  auto v1 = abelian_vec(g, {5, 5}, {{1, 0}, {0, 1}, {-1, -1}});
  CHECK(validate_vector(v1).valid());

  auto bad_product = abelian_vec(g, {5, 5}, {{1, 0}, {0, 1}});
  auto r = validate_vector(bad_product);
  CHECK(!r.valid());
  CHECK(!r.long_relation_ok);
  bool mentions = std::any_of(r.failures.begin(), r.failures.end(), [](const auto& f) {
    return f.find("long relation fails") != std::string::npos;
  });
  CHECK(mentions);

  auto not_generating = abelian_vec(g, {5, 5}, {{1, 0}, {-1, 0}});
  auto r2 = validate_vector(not_generating);
  CHECK(!r2.valid());
  CHECK(r2.long_relation_ok);
  CHECK(!r2.generates);
}

TEST_CASE("stabilizer sets over (Z/5)^2") {
  FiniteGroup g = group_from_abelian_invariants({5, 5});
  auto v1 = abelian_vec(g, {5, 5}, {{1, 0}, {0, 1}, {-1, -1}});
  auto v2 = abelian_vec(g, {5, 5}, {{1, -1}, {1, 2}, {-2, -1}});
  // three cyclic subgroups of order 5 overlapping in the identity
  CHECK(stabilizer_set(v1).size() == 13);
  CHECK(stabilizer_set(v2).size() == 13);
  CHECK(disjoint(v1, v2));
  CHECK(!disjoint(v1, v1));
}

TEST_CASE("empty branch parts") {
  auto trivial = group_from_permutations(1, {});
  GeneratingVector v;
  v.group = &trivial.group;
  v.base_genus = 2;
  v.hyperbolic_part = {0, 0, 0, 0};
  CHECK(validate_vector(v).valid());
  CHECK(stabilizer_set(v) == std::vector<int>{0});
  CHECK(disjoint(v, v));
}

TEST_CASE("stabilizer set is conjugation invariant") {
  auto d = realize_family("s4");
  auto sigma = stabilizer_set(d->v1);
  std::set<int> s(sigma.begin(), sigma.end());
  for (int g = 0; g < d->group.order(); ++g)
    for (int x : sigma) CHECK(s.count(d->group.conj(g, x)) == 1);
}

TEST_CASE("orbifold presentation shapes") {
  FiniteGroup g = group_from_abelian_invariants({5, 5});
  auto v = abelian_vec(g, {5, 5}, {{1, 0}, {0, 1}, {-1, -1}});
  auto [p, hom] = orbifold_presentation(v);
  CHECK(p.ngens == 3);
  CHECK(p.relators.size() == 4);  // three power relators + long relator
  for (const auto& r : p.relators) CHECK(hom.eval(r) == g.identity());
  // power relator of the first generator: x1^5
  CHECK(p.relators[0] == GroupWord::power(0, 5));

  // genus 1, no branch points: single commutator relator of inverses
  auto c2 = group_from_abelian_invariants({2});
  GeneratingVector torus;
  torus.group = &c2;
  torus.base_genus = 1;
  torus.hyperbolic_part = {1, 0};
  auto [pt, homt] = orbifold_presentation(torus);
  CHECK(pt.ngens == 2);
  CHECK(pt.relators.size() == 1);
  GroupWord expect;  // a b a^-1 b^-1
  expect.append(0, 1).append(1, 1).append(0, -1).append(1, -1);
  CHECK(pt.relators[0] == expect);
}

TEST_CASE("direct product presentation counts") {
  Presentation p1, p2;
  p1.ngens = 3;
  p1.relators.assign(4, GroupWord::power(0, 2));
  p2.ngens = 4;
  p2.relators.assign(5, GroupWord::power(1, 3));
  auto prod = direct_product_presentation(p1, p2);
  CHECK(prod.pres.ngens == 7);
  CHECK(prod.pres.relators.size() == 4 + 5 + 12);
  CHECK(prod.ngens1 == 3);
  CHECK(prod.ngens2 == 4);
  prod.pres.check();
  // shifted relators reference the second block
  CHECK(prod.pres.relators[4].letters[0].first >= 3);
}

TEST_CASE("all families are valid, disjoint, and hyperbolic") {
  for (const auto& info : family_table()) {
    CAPTURE(info.name);
    auto d = realize_family(info.name);
    CHECK(validate_vector(d->v1).valid());
    CHECK(validate_vector(d->v2).valid());
    CHECK(disjoint(d->v1, d->v2));
    for (const GeneratingVector* v : {&d->v1, &d->v2}) {
      // orbifold Euler number 2 - sum (1 - 1/m) < 0, scaled by lcm
      long long l = 1;
      for (int m : v->branch_orders()) l = std::lcm(l, (long long)m);
      long long num = 2 * l;
      for (int m : v->branch_orders()) num -= l - l / m;
      CHECK(num < 0);
    }
  }
}

TEST_CASE("family branch orders match the recorded types") {
  for (const auto& info : family_table()) {
    CAPTURE(info.name);
    auto d = realize_family(info.name);
    auto t1 = d->v1.branch_orders();
    auto t2 = d->v2.branch_orders();
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    CHECK(t1 == info.type1);
    CHECK(t2 == info.type2);
  }
}

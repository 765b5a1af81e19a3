#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "isoprod/group.hpp"

using namespace isoprod;

TEST_CASE("permutation closure orders") {
  auto a5 = group_from_permutations(
      5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  CHECK(a5.group.order() == 60);
  a5.group.check_axioms();

  auto trivial = group_from_permutations(1, {});
  CHECK(trivial.group.order() == 1);

  auto d4 = group_from_permutations(4, {parse_cycles("(1 2 3 4)", 4),
                                        parse_cycles("(1 3)", 4)});
  CHECK(d4.group.order() == 8);
  d4.group.check_axioms();
}

TEST_CASE("composition applies the right factor first") {
  // (1 2 3) o (1 2) : 1 -> 2 -> 3
  Permutation a = parse_cycles("(1 2 3)", 3);
  Permutation b = parse_cycles("(1 2)", 3);
  Permutation c = compose(a, b);
  CHECK(c[0] == 2);  // 1 |-> 3 in 0-based: point 0 -> 2
  CHECK(cycle_notation(c) == "(1 3)");
}

TEST_CASE("abelian groups") {
  FiniteGroup g = group_from_abelian_invariants({5, 5});
  CHECK(g.order() == 25);
  for (int x = 1; x < 25; ++x) CHECK(g.element_order(x) == 5);
  g.check_axioms();

  FiniteGroup h = group_from_abelian_invariants({2, 2, 2});
  CHECK(h.order() == 8);
  for (int x = 1; x < 8; ++x) CHECK(h.element_order(x) == 2);

  FiniteGroup c4 = group_from_abelian_invariants({4});
  CHECK(c4.order() == 4);
  CHECK(c4.element_order(1) == 4);
}

TEST_CASE("abelian coordinates round-trip") {
  std::vector<int> factors{3, 4};
  for (int x = 0; x < 12; ++x)
    CHECK(abelian_index(factors, abelian_coords(factors, x)) == x);
}

TEST_CASE("center") {
  auto a5 = group_from_permutations(
      5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  CHECK(center(a5.group).size() == 1);

  auto d4xz2 = group_from_permutations(
      6, {parse_cycles("(1 2 3 4)", 6), parse_cycles("(1 3)", 6),
          parse_cycles("(5 6)", 6)});
  CHECK(d4xz2.group.order() == 16);
  auto z = center(d4xz2.group);
  CHECK(z.size() == 4);
  // the center is {1, r^2} x {1, z}
  int r2 = d4xz2.index_of(parse_cycles("(1 3)(2 4)", 6));
  CHECK(std::find(z.begin(), z.end(), r2) != z.end());

  FiniteGroup z3sq = group_from_abelian_invariants({3, 3});
  CHECK(center(z3sq).size() == 9);
}

TEST_CASE("automorphism counts match GL orders") {
  FiniteGroup z5sq = group_from_abelian_invariants({5, 5});
  CHECK(automorphisms(z5sq).size() == 480);  // |GL(2,F5)| = 24 * 20

  FiniteGroup z2p3 = group_from_abelian_invariants({2, 2, 2});
  CHECK(automorphisms(z2p3).size() == 168);  // |GL(3,F2)|

  auto trivial = group_from_permutations(1, {});
  CHECK(automorphisms(trivial.group).size() == 1);
}

TEST_CASE("automorphisms form a group") {
  FiniteGroup g = group_from_abelian_invariants({2, 4});
  auto auts = automorphisms(g);
  std::set<Automorphism> all(auts.begin(), auts.end());
  CHECK(all.size() == auts.size());
  // identity present
  Automorphism id;
  id.map.resize(g.order());
  for (int i = 0; i < g.order(); ++i) id.map[i] = i;
  CHECK(all.count(id) == 1);
  // closed under composition and inverse
  for (const auto& a : auts) {
    CHECK(all.count(inverse_automorphism(g, a)) == 1);
    for (const auto& b : auts) CHECK(all.count(compose(g, a, b)) == 1);
  }
}

TEST_CASE("word_for_element") {
  FiniteGroup c4 = group_from_abelian_invariants({4});
  CHECK(word_for_element(c4, 0).empty());
  GroupWord w = word_for_element(c4, 3);  // x^3 = x^-1
  CHECK(w.size() == 1);
  CHECK(w.letters[0] == std::pair<int, int>{0, -1});

  FiniteGroup v4 = group_from_abelian_invariants({2, 2});
  GroupWord u = word_for_element(v4, abelian_index({2, 2}, {1, 1}));
  CHECK(u.size() == 2);

  // determinism
  auto a5 = group_from_permutations(
      5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  for (int x : {7, 23, 59})
    CHECK(word_for_element(a5.group, x) == word_for_element(a5.group, x));
}

TEST_CASE("eval and word round-trip") {
  auto s4 = group_from_permutations(4, {parse_cycles("(1 2 3 4)", 4),
                                        parse_cycles("(1 2)", 4)});
  for (int x = 0; x < s4.group.order(); ++x)
    CHECK(s4.group.eval(word_for_element(s4.group, x)) == x);
}

TEST_CASE("conjugacy classes") {
  auto s4 = group_from_permutations(4, {parse_cycles("(1 2 3 4)", 4),
                                        parse_cycles("(1 2)", 4)});
  int t = s4.index_of(parse_cycles("(1 2)", 4));
  CHECK(conjugacy_class(s4.group, t).size() == 6);  // transpositions
  int c4 = s4.index_of(parse_cycles("(1 2 3 4)", 4));
  CHECK(conjugacy_class(s4.group, c4).size() == 6);  // 4-cycles
  CHECK(conjugacy_class(s4.group, 0) == std::vector<int>{0});
}

TEST_CASE("cycle notation round-trip") {
  Permutation p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(cycle_notation(p) == "(1 2 3)(4 5)");
  CHECK(cycle_notation(identity_permutation(4)) == "()");
  CHECK(parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3));
}

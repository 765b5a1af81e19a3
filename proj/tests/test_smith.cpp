#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "isoprod/smith.hpp"

using namespace isoprod;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf(const IntegerMatrix& m, const SmithResult& s) {
  // U M V = D
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  // diagonal, nonnegative, divisibility chain, zeros last
  int k = std::min(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
  for (int t = 0; t < k; ++t) CHECK(s.d.at(t, t) >= 0);
  for (int t = 0; t + 1 < k; ++t) {
    const Integer &a = s.d.at(t, t), &b = s.d.at(t + 1, t + 1);
    if (a == 0)
      CHECK(b == 0);
    else
      CHECK(b % a == 0);
  }
}

}  // namespace

TEST_CASE("small fixed matrices") {
  {
    IntegerMatrix m = IntegerMatrix::identity(3);
    auto s = smith_normal_form(m);
    check_snf(m, s);
    CHECK(s.diagonal == std::vector<Integer>{1, 1, 1});
  }
  {
    IntegerMatrix m = from_rows({{2, 0}, {0, 0}});
    auto s = smith_normal_form(m);
    check_snf(m, s);
    CHECK(s.diagonal == std::vector<Integer>{2, 0});
  }
  {
    IntegerMatrix m = from_rows({{4, 6}, {6, 4}});
    auto s = smith_normal_form(m);
    check_snf(m, s);
    CHECK(s.diagonal == std::vector<Integer>{2, 10});
  }
  {
    // empty matrix: no relations
    IntegerMatrix m(0, 5);
    auto inv = abelian_invariants(m);
    CHECK(inv.rank == 5);
    CHECK(inv.torsion.empty());
  }
}

TEST_CASE("random matrices" * doctest::timeout(300)) {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 20), entry(-50, 50);
  for (int iter = 0; iter < 1000; ++iter) {
    int r = dim(rng), c = dim(rng);
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    auto s = smith_normal_form(m);
    check_snf(m, s);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntegerMatrix::identity(4)) == 1);
  CHECK(determinant(from_rows({{4, 6}, {6, 4}})) == -20);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("abelian invariants and coordinates") {
  // Z^2 / <(2,0)> = Z/2 + Z
  IntegerMatrix m = from_rows({{2, 0}});
  auto inv = abelian_invariants(m);
  CHECK(inv.rank == 1);
  CHECK(inv.torsion == std::vector<Integer>{2});
  CHECK(inv.is_trivial_class({2, 0}));
  CHECK(!inv.is_trivial_class({1, 0}));
  CHECK(!inv.is_trivial_class({0, 1}));
  // coordinate map is a homomorphism
  auto a = inv.canonical({3, 5});
  auto b = inv.canonical({1, -2});
  auto ab = inv.canonical({4, 3});
  for (size_t i = 0; i < ab.size(); ++i) {
    Integer sum = a[i] + b[i];
    if (i >= static_cast<size_t>(inv.rank)) {
      sum %= inv.torsion[i - inv.rank];
      if (sum < 0) sum += inv.torsion[i - inv.rank];
    }
    CHECK(ab[i] == sum);
  }
}

TEST_CASE("kernel of the coordinate map is the relation lattice") {
  IntegerMatrix m = from_rows({{2, 2, 0}, {0, 4, 0}});
  auto inv = abelian_invariants(m);
  // cokernel: Z/2 + Z/4 + Z
  CHECK(inv.rank == 1);
  CHECK(inv.torsion == std::vector<Integer>{2, 4});
  // every integer combination of the rows dies
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      CHECK(inv.is_trivial_class({2 * x, 2 * x + 4 * y, 0}));
  CHECK(!inv.is_trivial_class({0, 0, 1}));
  CHECK(!inv.is_trivial_class({1, 0, 0}));
}

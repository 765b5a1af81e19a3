#pragma once

#include <string>
#include <vector>

#include "isoprod/group.hpp"

namespace isoprod {

/// Abstract presentation: generator count plus relator words.
struct Presentation {
  int ngens = 0;
  std::vector<GroupWord> relators;
  std::vector<std::string> gen_names;  // optional, for display

  void check() const;  // relator letters in range
};

/// Hurwitz datum (a_1,b_1,...,a_g',b_g'; c_1,...,c_r) over a concrete group.
struct GeneratingVector {
  const FiniteGroup* group = nullptr;
  int base_genus = 0;
  std::vector<int> hyperbolic_part;  // 2*base_genus elements
  std::vector<int> branch_part;      // r elements, each of order >= 2

  int branch_count() const { return static_cast<int>(branch_part.size()); }
  std::vector<int> branch_orders() const;
  /// All 2g'+r entries in order.
  std::vector<int> entries() const;
};

struct ValidationReport {
  bool long_relation_ok = false;
  bool generates = false;
  bool orders_ok = false;  // every branch entry has order >= 2
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }
};

/// Check the three generating-vector conditions; failures are report
/// entries, not errors.
ValidationReport validate_vector(const GeneratingVector& v);

/// Stabilizer set: all conjugates of all powers of the branch entries
/// (identity included). Closed under conjugation.
std::vector<int> stabilizer_set(const GeneratingVector& v);

/// Sigma(V1) and Sigma(V2) meet only in the identity.
bool disjoint(const GeneratingVector& v1, const GeneratingVector& v2);

/// Orbifold presentation on 2g'+r generators: power relators for the branch
/// generators and the long relator, commutators formed from inverse
/// generators. The hom maps generator i to the i-th entry of V.
std::pair<Presentation, GroupHom> orbifold_presentation(const GeneratingVector& v);

struct ProductPresentation {
  Presentation pres;
  int ngens1 = 0;  // generators [0, ngens1) are the first block
  int ngens2 = 0;
};

/// Presentation of P1 x P2: both relator lists plus all cross-block
/// commutators.
ProductPresentation direct_product_presentation(const Presentation& p1,
                                                const Presentation& p2);

}  // namespace isoprod

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "isoprod/presentation.hpp"
#include "isoprod/todd_coxeter.hpp"

namespace isoprod {

/// Static description of one embedded family: expected values for the
/// regression checks plus display metadata.
struct FamilyInfo {
  std::string name;            // CLI key
  std::string display;         // human-readable group name
  std::string small_group_id;  // <order, id> label
  int moduli_dim = 0;          // dimension D, display only
  std::vector<int> type1, type2;        // branch orders, sorted
  std::vector<int> expected_h1;         // invariant factors d1 | d2 | ...
  std::vector<std::string> expected_trivial;  // element names
  std::string aut_note;  // extra context for the Aut_Q report, may be empty
};

/// A realized family: the concrete group plus both generating vectors.
/// Not copyable/movable: the vectors point into `group`.
struct FamilyDatum {
  const FamilyInfo* info = nullptr;
  FiniteGroup group;
  GeneratingVector v1, v2;

  FamilyDatum() = default;
  FamilyDatum(const FamilyDatum&) = delete;
  FamilyDatum& operator=(const FamilyDatum&) = delete;
};

/// All twelve families in fixed display order.
const std::vector<FamilyInfo>& family_table();

/// Lookup by CLI key; nullptr when unknown.
const FamilyInfo* find_family(const std::string& name);

/// Build the group and vectors for a family. `coset_cap` only matters for
/// the presentation-defined groups.
std::unique_ptr<FamilyDatum> realize_family(const std::string& name,
                                            int coset_cap = kDefaultCosetCap);

}  // namespace isoprod

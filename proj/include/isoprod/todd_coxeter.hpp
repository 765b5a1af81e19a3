#pragma once

#include "isoprod/group.hpp"
#include "isoprod/presentation.hpp"

namespace isoprod {

inline constexpr int kDefaultCosetCap = 100000;

/// Realize a finite presented group by Todd–Coxeter coset enumeration over
/// the trivial subgroup (HLT scan-and-fill, deterministic coset numbering).
/// Returns the regular permutation realization and the quotient map sending
/// presentation generators to group elements; the map is an isomorphism.
/// Throws ResourceError when the enumeration exceeds `coset_cap` live cosets
/// (possibly-infinite group).
///
/// The returned hom's `target` pointer is left null because the group is
/// returned by value; point it at wherever the group ends up stored.
std::pair<FiniteGroup, GroupHom> realize_presentation(const Presentation& p,
                                                      int coset_cap = kDefaultCosetCap);

}  // namespace isoprod

#pragma once

#include "isoprod/presentation.hpp"

namespace isoprod {

/// Numerical invariants of S = (C1 x C2)/G.
struct SurfaceInvariants {
  int g1 = 0, g2 = 0;  // genera of the covering curves
  int q = 0;           // irregularity
  int p_g = 0;         // geometric genus
  int chi = 0;         // holomorphic Euler characteristic
  int Ksq = 0;         // canonical self-intersection
  int e = 0;           // topological Euler number
};

/// Genus of the covering curve from Riemann-Hurwitz:
/// 2g - 2 = |G| (2g' - 2 + sum(1 - 1/m_i)), exact integer arithmetic.
/// Throws DatumError if the right side is not an even integer or g < 0.
int curve_genus(const GeneratingVector& v);

/// chi = (g1-1)(g2-1)/|G|, q = g1'+g2', p_g = chi-1+q, Ksq = 8 chi, e = 4 chi.
/// Requires both vectors valid and disjoint (free diagonal action).
SurfaceInvariants surface_invariants(const FiniteGroup& g, const GeneratingVector& v1,
                                     const GeneratingVector& v2);

}  // namespace isoprod

#include "isoprod/invariants.hpp"

#include <numeric>

namespace isoprod {

int curve_genus(const GeneratingVector& v) {
  auto rep = validate_vector(v);
  if (!rep.valid()) throw DatumError("invalid generating vector: " + rep.failures[0]);

  long long order = v.group->order();
  auto orders = v.branch_orders();
  long long lcm = 1;
  for (int m : orders) lcm = std::lcm(lcm, static_cast<long long>(m));
  // |G| * ((2g'-2)L + sum(L - L/m)) must be divisible by L, and the quotient
  // is 2g-2.
  long long num = (2LL * v.base_genus - 2) * lcm;
  for (int m : orders) num += lcm - lcm / m;
  num *= order;
  if (num % lcm != 0) throw DatumError("Riemann-Hurwitz: non-integral degree");
  long long two_g_minus_2 = num / lcm;
  if (two_g_minus_2 % 2 != 0) throw DatumError("Riemann-Hurwitz: odd 2g-2");
  long long g = two_g_minus_2 / 2 + 1;
  if (g < 0) throw DatumError("Riemann-Hurwitz: negative genus");
  return static_cast<int>(g);
}

SurfaceInvariants surface_invariants(const FiniteGroup& g, const GeneratingVector& v1,
                                     const GeneratingVector& v2) {
  if (v1.group != &g || v2.group != &g) throw UsageError("vector over a different group");
  if (!disjoint(v1, v2)) throw UsageError("stabilizer sets not disjoint: action is not free");

  SurfaceInvariants s;
  s.g1 = curve_genus(v1);
  s.g2 = curve_genus(v2);
  long long num = static_cast<long long>(s.g1 - 1) * (s.g2 - 1);
  if (num % g.order() != 0) throw DatumError("chi = (g1-1)(g2-1)/|G| is not integral");
  s.chi = static_cast<int>(num / g.order());
  if (s.chi <= 0) throw DatumError("chi must be positive");
  s.q = v1.base_genus + v2.base_genus;
  s.p_g = s.chi - 1 + s.q;
  s.Ksq = 8 * s.chi;
  s.e = 4 * s.chi;
  return s;
}

}  // namespace isoprod

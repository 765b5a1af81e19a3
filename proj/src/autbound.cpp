#include "isoprod/autbound.hpp"

#include <algorithm>
#include <map>

namespace isoprod {

NielsenClass NielsenClass::of(const GeneratingVector& v) {
  NielsenClass nc;
  for (int c : v.branch_part) nc.class_reps.push_back(conjugacy_class(*v.group, c)[0]);
  std::sort(nc.class_reps.begin(), nc.class_reps.end());
  return nc;
}

std::vector<Automorphism> nielsen_preserving_automorphisms(const FiniteGroup& g,
                                                           const GeneratingVector& v1,
                                                           const GeneratingVector& v2,
                                                           int cap) {
  NielsenClass n1 = NielsenClass::of(v1), n2 = NielsenClass::of(v2);
  std::vector<Automorphism> result;
  for (const Automorphism& phi : automorphisms(g, cap)) {
    auto mapped = [&](const GeneratingVector& v) {
      NielsenClass nc;
      for (int c : v.branch_part)
        nc.class_reps.push_back(conjugacy_class(g, phi(c))[0]);
      std::sort(nc.class_reps.begin(), nc.class_reps.end());
      return nc;
    };
    if (mapped(v1) == n1 && mapped(v2) == n2) result.push_back(phi);
  }
  return result;
}

namespace {

int unrepeated_count(const GeneratingVector& v) {
  int cnt = 0;
  for (size_t i = 0; i < v.branch_part.size(); ++i) {
    bool unique = true;
    for (size_t j = 0; j < v.branch_part.size() && unique; ++j)
      unique = i == j || v.branch_part[i] != v.branch_part[j];
    if (unique) ++cnt;
  }
  return cnt;
}

// Can the per-order branch-point counts be covered by orbits: each special
// orbit size used at most once, any number of regular orbits?
bool orbits_fit(std::vector<int> counts, const std::vector<int>& specials,
                size_t next, int regular) {
  if (next == specials.size()) {
    for (int c : counts)
      if (c % regular != 0) return false;
    return true;
  }
  if (orbits_fit(counts, specials, next + 1, regular)) return true;  // skip this orbit
  for (int& c : counts)
    if (c >= specials[next]) {
      c -= specials[next];
      if (orbits_fit(counts, specials, next + 1, regular)) return true;
      c += specials[next];
    }
  return false;
}

}  // namespace

CentralizerStatus centralizer_status(const GeneratingVector& v) {
  if (v.base_genus >= 2) return CentralizerStatus::kNotApplicable;
  int u = unrepeated_count(v);
  if (u >= 3) return CentralizerStatus::kCertified;
  if (u >= 2) return CentralizerStatus::kDoubleCap;
  return CentralizerStatus::kUndetermined;
}

bool centralizer_is_center(const GeneratingVector& v) {
  CentralizerStatus s = centralizer_status(v);
  if (s == CentralizerStatus::kNotApplicable)
    throw UsageError("centralizer criterion needs base genus <= 1");
  return s == CentralizerStatus::kCertified;
}

int pgl2_orbit_bound(const GeneratingVector& v) {
  if (v.base_genus != 0) throw UsageError("orbit bound needs base genus 0");
  auto orders = v.branch_orders();
  int r = static_cast<int>(orders.size());
  if (r < 3) throw UsageError("orbit bound needs at least 3 branch points");

  std::map<int, int> by_order;
  for (int m : orders) ++by_order[m];
  std::vector<int> counts;
  for (auto& [m, c] : by_order) counts.push_back(c);
  bool all_equal = by_order.size() == 1;

  int best = 1;  // the trivial group always fits

  // cyclic Z/n: two fixed points, other orbits of size n
  int cyclic_cap = all_equal ? r : r - 1;
  for (int n = 2; n <= r; ++n)
    if (orbits_fit(counts, {1, 1}, 0, n)) best = std::max(best, std::min(n, cyclic_cap));

  // dihedral D_n: special orbits (n, n, 2), regular 2n
  int dihedral_cap = all_equal ? 2 * r : 2 * r - 4;
  for (int n = 2; n <= r; ++n)
    if (orbits_fit(counts, {n, n, 2}, 0, 2 * n))
      best = std::max(best, std::min(2 * n, dihedral_cap));

  struct Platonic { std::vector<int> specials; int regular, order; };
  for (const Platonic& p : {Platonic{{6, 4, 4}, 12, 12},
                            Platonic{{12, 8, 6}, 24, 24},
                            Platonic{{30, 20, 12}, 60, 60}})
    if (orbits_fit(counts, p.specials, 0, p.regular)) best = std::max(best, p.order);

  return best;
}

AutBoundReport aut_q_bound(const FiniteGroup& g, const GeneratingVector& v1,
                           const GeneratingVector& v2, int cap) {
  if (v1.base_genus != 0 || v2.base_genus != 0)
    throw UsageError("aut_q_bound needs q(S) = 0 (both base genera 0)");

  AutBoundReport rep;
  rep.center_order = static_cast<long long>(center(g).size());
  rep.inn_order = g.order() / rep.center_order;
  rep.h_order = static_cast<long long>(nielsen_preserving_automorphisms(g, v1, v2, cap).size());

  CentralizerStatus s1 = centralizer_status(v1), s2 = centralizer_status(v2);
  rep.centralizer_certified_1 = s1 == CentralizerStatus::kCertified;
  rep.centralizer_certified_2 = s2 == CentralizerStatus::kCertified;
  rep.n_prime_bound_1 = pgl2_orbit_bound(v1);
  rep.n_prime_bound_2 = pgl2_orbit_bound(v2);

  rep.lower = rep.center_order * (rep.h_order / rep.inn_order);
  rep.established = g.is_abelian() && rep.centralizer_certified_1 && rep.centralizer_certified_2;
  if (!rep.established)
    rep.notes.push_back("lower bound is combinatorial; exactness not certified");

  auto centralizer_cap = [&](CentralizerStatus s) -> std::optional<long long> {
    switch (s) {
      case CentralizerStatus::kCertified: return rep.center_order;
      case CentralizerStatus::kDoubleCap: return 2 * rep.center_order;
      default: return std::nullopt;
    }
  };
  std::optional<long long> upper;
  if (auto c2 = centralizer_cap(s2))
    upper = static_cast<long long>(rep.n_prime_bound_1) * *c2;
  if (auto c1 = centralizer_cap(s1)) {
    long long u = static_cast<long long>(rep.n_prime_bound_2) * *c1;
    if (!upper || u < *upper) upper = u;
  }
  rep.upper = upper;
  if (!upper) rep.notes.push_back("upper bound not determined (centralizers uncapped)");
  return rep;
}

namespace {

// Try to realize the exception automorphism: fixed images on `fixed`,
// c1 -> c2, c2 -> c2^-1 c1 c2.
std::optional<Automorphism> exception_witness(const FiniteGroup& g,
                                              const std::vector<int>& fixed, int c1,
                                              int c2, int cap) {
  int target = g.mul(g.mul(g.inv(c2), c1), c2);
  for (const Automorphism& phi : automorphisms(g, cap)) {
    if (phi(c1) != c2 || phi(c2) != target) continue;
    bool ok = true;
    for (int f : fixed) ok = ok && phi(f) == f;
    if (ok) return phi;
  }
  return std::nullopt;
}

}  // namespace

ExceptionReport detect_exceptions(const GeneratingVector& v, bool search_witness,
                                  int cap) {
  if (v.base_genus >= 2)
    throw UsageError("exception detection needs base genus <= 1");
  ExceptionReport rep;
  auto orders = std::vector<int>(v.branch_orders());
  int r = static_cast<int>(orders.size());

  std::vector<int> twos, odds;
  for (int i = 0; i < r; ++i)
    (orders[i] == 2 ? twos : odds).push_back(i);
  bool odds_odd = std::all_of(odds.begin(), odds.end(),
                              [&](int i) { return orders[i] % 2 == 1; });

  if (v.base_genus == 1 && r == 2 && twos.size() == 2) {
    rep.kind = ExceptionKind::kI;
    rep.detail = "signature (1; 2,2)";
  } else if (v.base_genus == 0 && r == 3 && twos.size() == 2 && odds.size() == 1 &&
             odds_odd) {
    rep.kind = ExceptionKind::kII;
    rep.detail = "signature (0; 2,2,odd)";
  } else if (v.base_genus == 0 && r == 4 && twos.size() == 2 && odds.size() == 2 &&
             odds_odd) {
    rep.kind = ExceptionKind::kIII;
    rep.detail = "signature (0; 2,2,odd,odd)";
  } else {
    rep.detail = "no exception pattern";
    return rep;
  }
  rep.pattern_matches = true;

  if (search_witness) {
    std::vector<int> fixed = v.hyperbolic_part;
    for (int i : odds) fixed.push_back(v.branch_part[i]);
    int c1 = v.branch_part[twos[0]], c2 = v.branch_part[twos[1]];
    rep.witness = exception_witness(*v.group, fixed, c1, c2, cap);
    if (!rep.witness) rep.witness = exception_witness(*v.group, fixed, c2, c1, cap);
    if (!rep.witness) {
      rep.kind = ExceptionKind::kNone;
      rep.detail += "; no witness automorphism";
    }
  }
  return rep;
}

}  // namespace isoprod

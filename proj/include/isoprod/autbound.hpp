#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoprod/presentation.hpp"

namespace isoprod {

/// Per-vector Nielsen class: multiset of conjugacy classes of the branch
/// entries (canonical representative = minimal element index) with their
/// orders.
struct NielsenClass {
  std::vector<int> class_reps;  // sorted, one per branch entry

  static NielsenClass of(const GeneratingVector& v);
  bool operator==(const NielsenClass&) const = default;
};

/// Automorphisms preserving the Nielsen class of both vectors. Contains
/// Inn(G) and is a subgroup of Aut(G).
std::vector<Automorphism> nielsen_preserving_automorphisms(const FiniteGroup& g,
                                                           const GeneratingVector& v1,
                                                           const GeneratingVector& v2,
                                                           int cap = 64);

enum class CentralizerStatus {
  kCertified,      // >= 3 unrepeated local monodromies: C = Z(G)
  kDoubleCap,      // >= 2 unrepeated: |C| <= 2 |Z(G)|
  kUndetermined,   // criterion says nothing
  kNotApplicable,  // base genus >= 2
};

/// True iff at least three branch entries differ from every other entry
/// (then any centralizing automorphism fixes >= 3 base points).
/// Base genus must be <= 1.
bool centralizer_is_center(const GeneratingVector& v);

CentralizerStatus centralizer_status(const GeneratingVector& v);

/// Upper bound on the order of the lifting automorphism group of the base
/// P^1, from the special-orbit sizes of the finite subgroups of PGL(2,C).
/// Base genus 0, at least three branch points.
int pgl2_orbit_bound(const GeneratingVector& v);

struct AutBoundReport {
  long long h_order = 0;       // |H| (Nielsen-preserving automorphisms)
  long long inn_order = 0;     // |Inn(G)|
  long long center_order = 0;  // |Z(G)|
  bool centralizer_certified_1 = false;
  bool centralizer_certified_2 = false;
  int n_prime_bound_1 = 0;
  int n_prime_bound_2 = 0;
  long long lower = 0;               // |Z(G)| |H| / |Inn(G)|
  bool established = false;          // lower is the exact |Aut_Q(S)|
  std::optional<long long> upper;    // nullopt: not determined
  std::vector<std::string> notes;
};

/// Combinatorial bounds on |Aut_Q(S)| = |Aut*(S)| for q(S) = 0.
AutBoundReport aut_q_bound(const FiniteGroup& g, const GeneratingVector& v1,
                           const GeneratingVector& v2, int cap = 64);

enum class ExceptionKind { kNone, kI, kII, kIII };

struct ExceptionReport {
  ExceptionKind kind = ExceptionKind::kNone;
  bool pattern_matches = false;
  std::optional<Automorphism> witness;  // only when the search is on
  std::string detail;
};

/// Detect the three translation/involution exception patterns:
/// I: (1; 2,2), II: (0; 2,2,2n+1), III: (0; 2,2,2n+1,2h+1). With
/// `search_witness`, brute-force Aut(G) for an automorphism with the stated
/// images. Base genus must be <= 1.
ExceptionReport detect_exceptions(const GeneratingVector& v, bool search_witness,
                                  int cap = 64);

}  // namespace isoprod

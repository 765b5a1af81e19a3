#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isoprod {

// Enumeration/closure blew past a configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a precondition (mismatched groups, bad flags, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The input data are arithmetically inconsistent (non-integral genus etc.).
struct DatumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Word in abstract generators: sequence of (generator index, exponent sign).
struct GroupWord {
  std::vector<std::pair<int, int>> letters;  // (gen, +1 or -1)

  GroupWord() = default;

  static GroupWord power(int gen, int exp);

  GroupWord inverse() const;
  GroupWord& append(int gen, int sign) {
    letters.emplace_back(gen, sign);
    return *this;
  }
  GroupWord& append(const GroupWord& w);
  /// Shift every generator index by `offset` (block embedding).
  GroupWord shifted(int offset) const;

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const GroupWord&) const = default;
};

/// Concrete finite group: elements 0..n-1, full multiplication table,
/// identity at index 0, named generating set.
///
/// Convention: mul(a, b) = a∘b, i.e. in a permutation realization b acts
/// first. The Hurwitz data of the embedded families require this order.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(int order, std::vector<int> mul_table, std::vector<int> gens,
              std::vector<std::string> gen_names);

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  int power(int a, long long e) const;

  const std::vector<int>& generators() const { return gens_; }
  const std::string& generator_name(int i) const { return gen_names_[i]; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  /// Evaluate a word in the stored generators.
  int eval(const GroupWord& w) const;

  /// Display name for an element; defaults to a shortest word in the
  /// generators ("1" for the identity).
  std::string element_name(int x) const;
  void set_element_names(std::vector<std::string> names);

  bool is_abelian() const;

  /// Exhaustive group-law check (associativity, identity, inverses,
  /// generation). Cheap for the orders handled here.
  void check_axioms() const;

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> gen_names_;
  std::vector<std::string> elem_names_;  // optional display override
};

/// Map from the generators of a presentation (or of a group) into a target
/// group: one image per source generator.
struct GroupHom {
  const FiniteGroup* target = nullptr;
  std::vector<int> images;

  int eval(const GroupWord& w) const;
};

/// Bijective endomorphism given by its full element map.
struct Automorphism {
  std::vector<int> map;  // element -> element

  int operator()(int x) const { return map[x]; }
  bool operator==(const Automorphism&) const = default;
  bool operator<(const Automorphism& o) const { return map < o.map; }
};

/// Permutation of {0..degree-1}, stored as the image vector.
using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
/// a∘b (b acts first).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for id.
std::string cycle_notation(const Permutation& p);
/// Parse cycle notation ("(1 2 3)(4 5)" or "(1,2,3)"); points are 1-based.
Permutation parse_cycles(const std::string& text, int degree);

/// Permutation realization: the group plus the permutation standing behind
/// each element index.
struct PermGroup {
  FiniteGroup group;
  std::vector<Permutation> elements;

  int index_of(const Permutation& p) const;
};

inline constexpr int kDefaultOrderCap = 10000;

/// Closure of the given permutations under composition. Element 0 is the
/// identity; remaining elements in BFS discovery order.
PermGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                  const std::vector<std::string>& names = {},
                                  int cap = kDefaultOrderCap);

/// Direct sum of cyclic groups Z/d1 x Z/d2 x ...; elements are tuples in
/// mixed-radix order, generators the unit vectors.
FiniteGroup group_from_abelian_invariants(const std::vector<int>& factors,
                                          int cap = kDefaultOrderCap);

/// Tuple of exponents for an element of an abelian-invariants group.
std::vector<int> abelian_coords(const std::vector<int>& factors, int element);
int abelian_index(const std::vector<int>& factors, const std::vector<int>& coords);

/// Elements commuting with everything.
std::vector<int> center(const FiniteGroup& g);

/// Conjugacy class of x.
std::vector<int> conjugacy_class(const FiniteGroup& g, int x);

/// Full automorphism group by brute force over generator images (candidates
/// pruned by element order), order <= cap.
std::vector<Automorphism> automorphisms(const FiniteGroup& g, int cap = 64);

Automorphism compose(const FiniteGroup& g, const Automorphism& a, const Automorphism& b);
Automorphism inverse_automorphism(const FiniteGroup& g, const Automorphism& a);

/// Shortest word in the stored generators (inverse letters allowed)
/// evaluating to target. Deterministic: BFS, generator order, +1 before -1.
GroupWord word_for_element(const FiniteGroup& g, int target);

/// Same, over an arbitrary generating set given by element indices.
GroupWord word_over_generators(const FiniteGroup& g, const std::vector<int>& gens,
                               int target);

}  // namespace isoprod

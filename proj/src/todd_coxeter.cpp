#include "isoprod/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace isoprod {

namespace {

// HLT-style coset enumeration over the trivial subgroup.
//
// Columns 2*g and 2*g+1 hold the action of generator g and its inverse.
// New cosets are defined at the first undefined entry encountered while
// scanning (lowest coset, then relator order), which keeps the numbering
// deterministic. Coincidences are merged through a union-find; every read
// goes through find(), so stale entries into dead cosets resolve to their
// representative.
class Enumerator {
 public:
  Enumerator(const Presentation& p, int cap) : p_(p), cap_(cap) {
    for (const auto& r : p_.relators) {
      std::vector<int> cols;
      for (auto [g, s] : r.letters) cols.push_back(col(g, s));
      relator_cols_.push_back(std::move(cols));
    }
    new_coset();
  }

  // Permutation action of each generator on the live cosets (right
  // multiplication), relabeled 0..n-1 in coset order.
  std::vector<Permutation> run() {
    for (size_t alpha = 0; alpha < table_.size(); ++alpha) {
      if (dead(alpha)) continue;
      for (const auto& cols : relator_cols_) {
        scan_and_fill(static_cast<int>(alpha), cols);
        process_coincidences();
        if (dead(alpha)) break;
      }
      if (dead(alpha)) continue;
      for (int c = 0; c < 2 * p_.ngens && !dead(alpha); ++c) {
        if (entry(static_cast<int>(alpha), c) < 0) {
          int beta = new_coset();
          set_entry(find(static_cast<int>(alpha)), c, beta);
          process_coincidences();
        }
      }
    }
    verify_closed();
    return live_permutations();
  }

 private:
  static int col(int g, int s) { return 2 * g + (s > 0 ? 0 : 1); }
  static int col_inv(int c) { return c ^ 1; }

  bool dead(size_t a) { return find(static_cast<int>(a)) != static_cast<int>(a); }

  int find(int a) {
    while (rep_[a] != a) {
      rep_[a] = rep_[rep_[a]];
      a = rep_[a];
    }
    return a;
  }

  int entry(int a, int c) {
    int t = table_[find(a)][c];
    return t < 0 ? -1 : find(t);
  }

  void set_entry(int a, int c, int b) {
    table_[a][c] = b;
    table_[b][col_inv(c)] = a;
  }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= cap_)
      throw ResourceError("coset enumeration exceeds cap (possibly infinite group)");
    table_.emplace_back(2 * std::max(p_.ngens, 1), -1);
    rep_.push_back(static_cast<int>(rep_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  // Scan a relator from coset a, defining cosets so the scan always
  // completes; a mismatch queues a coincidence.
  void scan_and_fill(int a, const std::vector<int>& cols) {
    if (cols.empty()) return;
    int f = find(a);
    size_t i = 0;
    int b = f;
    size_t j = cols.size();
    while (true) {
      while (i < j && entry(f, cols[i]) >= 0) f = entry(f, cols[i++]);
      if (i == j) {
        if (f != b) queue_.emplace_back(f, b);
        return;
      }
      while (j > i && entry(b, col_inv(cols[j - 1])) >= 0)
        b = entry(b, col_inv(cols[--j]));
      if (i == j) {
        if (f != b) queue_.emplace_back(f, b);
        return;
      }
      if (i == j - 1) {
        set_entry(f, cols[i], b);  // deduction closes the scan
        return;
      }
      int c = new_coset();
      set_entry(f, cols[i], c);
      f = c;
      ++i;
    }
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      auto [u, v] = queue_.front();
      queue_.pop_front();
      int x = find(u), y = find(v);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      for (int c = 0; c < 2 * p_.ngens; ++c) {
        int raw = table_[y][c];
        if (raw < 0) continue;
        int t = find(raw);
        int cur = table_[x][c] < 0 ? -1 : find(table_[x][c]);
        if (cur < 0) {
          int mirror = table_[t][col_inv(c)];
          table_[x][c] = t;
          table_[t][col_inv(c)] = x;
          if (mirror >= 0 && find(mirror) != x)
            queue_.emplace_back(find(mirror), x);
        } else if (cur != t) {
          queue_.emplace_back(cur, t);
        }
      }
    }
  }

  void verify_closed() {
    for (size_t a = 0; a < table_.size(); ++a) {
      if (dead(a)) continue;
      for (int c = 0; c < 2 * p_.ngens; ++c)
        if (entry(static_cast<int>(a), c) < 0)
          throw DatumError("coset table not closed");
      for (const auto& cols : relator_cols_) {
        int x = static_cast<int>(a);
        for (int c : cols) x = entry(x, c);
        if (x != find(static_cast<int>(a)))
          throw DatumError("relator does not close on coset table");
      }
    }
  }

  std::vector<Permutation> live_permutations() {
    std::vector<int> label(table_.size(), -1);
    int n = 0;
    for (size_t a = 0; a < table_.size(); ++a)
      if (!dead(a)) label[a] = n++;
    std::vector<Permutation> perms(p_.ngens, Permutation(n, -1));
    for (size_t a = 0; a < table_.size(); ++a) {
      if (dead(a)) continue;
      for (int g = 0; g < p_.ngens; ++g)
        perms[g][label[a]] = label[entry(static_cast<int>(a), col(g, 1))];
    }
    return perms;
  }

  const Presentation& p_;
  int cap_;
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;  // union-find over cosets
  std::deque<std::pair<int, int>> queue_;
  std::vector<std::vector<int>> relator_cols_;
};

}  // namespace

std::pair<FiniteGroup, GroupHom> realize_presentation(const Presentation& p,
                                                      int coset_cap) {
  p.check();
  if (p.ngens == 0) return {FiniteGroup(1, {0}, {}, {}), GroupHom{nullptr, {}}};

  Enumerator en(p, coset_cap);
  std::vector<Permutation> action = en.run();
  int n = static_cast<int>(action[0].size());

  // Right multiplication by g is an anti-homomorphism under our composition
  // convention; realize generator g as right multiplication by g^-1 instead.
  std::vector<Permutation> gens;
  gens.reserve(action.size());
  for (const auto& a : action) gens.push_back(inverse(a));

  std::vector<std::string> names = p.gen_names;
  if (names.empty())
    for (int i = 0; i < p.ngens; ++i) names.push_back("x" + std::to_string(i + 1));
  PermGroup pg = group_from_permutations(n, gens, names, n);

  GroupHom hom;
  hom.images.resize(p.ngens);
  for (int i = 0; i < p.ngens; ++i) hom.images[i] = pg.index_of(gens[i]);
  return {std::move(pg.group), std::move(hom)};
}

}  // namespace isoprod

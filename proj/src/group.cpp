#include "isoprod/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace isoprod {

GroupWord GroupWord::power(int gen, int exp) {
  GroupWord w;
  int sign = exp >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(exp); ++i) w.append(gen, sign);
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.append(it->first, -it->second);
  return w;
}

GroupWord& GroupWord::append(const GroupWord& w) {
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  return *this;
}

GroupWord GroupWord::shifted(int offset) const {
  GroupWord w;
  for (auto [g, s] : letters) w.append(g + offset, s);
  return w;
}

FiniteGroup::FiniteGroup(int order, std::vector<int> mul_table, std::vector<int> gens,
                         std::vector<std::string> gen_names)
    : n_(order), mul_(std::move(mul_table)), gens_(std::move(gens)),
      gen_names_(std::move(gen_names)) {
  if (gen_names_.size() != gens_.size()) {
    gen_names_.resize(gens_.size());
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gen_names_[i].empty()) gen_names_[i] = "g" + std::to_string(i + 1);
  }
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::power(int a, long long e) const {
  int m = element_order(a);
  e %= m;
  if (e < 0) e += m;
  int r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::eval(const GroupWord& w) const {
  int r = 0;
  for (auto [g, s] : w.letters) {
    int x = gens_.at(g);
    r = mul(r, s > 0 ? x : inv(x));
  }
  return r;
}

int GroupHom::eval(const GroupWord& w) const {
  int r = target->identity();
  for (auto [g, s] : w.letters) {
    int x = images.at(g);
    r = target->mul(r, s > 0 ? x : target->inv(x));
  }
  return r;
}

std::string FiniteGroup::element_name(int x) const {
  if (!elem_names_.empty()) return elem_names_[x];
  if (x == 0) return "1";
  GroupWord w = word_for_element(*this, x);
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size();) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    int e = static_cast<int>(j - i) * w.letters[i].second;
    if (i) os << "*";
    os << gen_names_[w.letters[i].first];
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

void FiniteGroup::set_element_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_)
    throw UsageError("element name list has wrong length");
  elem_names_ = std::move(names);
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::check_axioms() const {
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw DatumError("identity law fails");
    if (mul(inv_[a], a) != 0 || mul(a, inv_[a]) != 0)
      throw DatumError("inverse law fails");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw DatumError("associativity fails");
  // generation
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  std::deque<int> q{0};
  int cnt = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int g : gens_)
      for (int y : {mul(x, g), mul(x, inv_[g])})
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          q.push_back(y);
        }
  }
  if (cnt != n_) throw DatumError("generators do not generate");
}

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) os << " ";
      os << j + 1;
      first = false;
      j = p[j];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = identity_permutation(degree);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw UsageError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i >= text.size()) throw UsageError("unterminated cycle: " + text);
      if (text[i] == ')') { ++i; break; }
      size_t end;
      int v = std::stoi(text.substr(i), &end);
      i += end;
      if (v < 1 || v > degree) throw UsageError("cycle point out of range: " + text);
      cyc.push_back(v - 1);
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (p[from] != from && k + 1 < cyc.size())
        throw UsageError("point repeated in cycle: " + text);
      p[from] = to;
    }
    skip_ws();
  }
  // p currently maps "point -> next point" reading left to right; that is the
  // standard cycle map.
  return p;
}

int PermGroup::index_of(const Permutation& p) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return static_cast<int>(i);
  return -1;
}

PermGroup group_from_permutations(int degree, const std::vector<Permutation>& gens,
                                  const std::vector<std::string>& names, int cap) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw UsageError("generator degree mismatch");
    std::vector<char> hit(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw UsageError("not a permutation");
      hit[v] = 1;
    }
  }
  std::vector<Permutation> elems{identity_permutation(degree)};
  std::map<Permutation, int> index{{elems[0], 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > cap)
          throw ResourceError("permutation closure exceeds cap");
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<int> gen_idx;
  gen_idx.reserve(gens.size());
  for (const auto& g : gens) gen_idx.push_back(index.at(g));
  std::vector<std::string> gn = names;
  if (gn.empty())
    for (const auto& g : gens) gn.push_back(cycle_notation(g));
  PermGroup pg{FiniteGroup(n, std::move(table), std::move(gen_idx), std::move(gn)),
               std::move(elems)};
  return pg;
}

FiniteGroup group_from_abelian_invariants(const std::vector<int>& factors, int cap) {
  long long order = 1;
  for (int d : factors) {
    if (d < 2) throw UsageError("abelian invariant factors must be >= 2");
    order *= d;
    if (order > cap) throw ResourceError("abelian group order exceeds cap");
  }
  int n = static_cast<int>(order);
  int k = static_cast<int>(factors.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto ca = abelian_coords(factors, a);
    for (int b = 0; b < n; ++b) {
      auto cb = abelian_coords(factors, b);
      for (int i = 0; i < k; ++i) cb[i] = (cb[i] + ca[i]) % factors[i];
      table[a * n + b] = abelian_index(factors, cb);
    }
  }
  std::vector<int> gens;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    std::vector<int> c(k, 0);
    c[i] = 1;
    gens.push_back(abelian_index(factors, c));
    names.push_back("e" + std::to_string(i + 1));
  }
  FiniteGroup g(n, std::move(table), std::move(gens), std::move(names));
  std::vector<std::string> elem_names(n);
  for (int a = 0; a < n; ++a) {
    auto c = abelian_coords(factors, a);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << c[i];
    os << ")";
    elem_names[a] = os.str();
  }
  elem_names[0] = "1";
  g.set_element_names(std::move(elem_names));
  return g;
}

std::vector<int> abelian_coords(const std::vector<int>& factors, int element) {
  std::vector<int> c(factors.size());
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    c[i] = element % factors[i];
    element /= factors[i];
  }
  return c;
}

int abelian_index(const std::vector<int>& factors, const std::vector<int>& coords) {
  int idx = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    idx = idx * factors[i] + (coords[i] % factors[i] + factors[i]) % factors[i];
  return idx;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> conjugacy_class(const FiniteGroup& g, int x) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> cls;
  for (int h = 0; h < g.order(); ++h) {
    int y = g.conj(h, x);
    if (!seen[y]) {
      seen[y] = 1;
      cls.push_back(y);
    }
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

namespace {

/// BFS factorization of every element over the stored generators:
// parent/edge arrays such that elem = mul(parent_elem, gen or gen^-1).
struct CayleyTree {
  std::vector<int> parent, gen, sign;  // sign 0 for root
};

CayleyTree cayley_tree(const FiniteGroup& g) {
  CayleyTree t;
  t.parent.assign(g.order(), -1);
  t.gen.assign(g.order(), -1);
  t.sign.assign(g.order(), 0);
  std::deque<int> q{0};
  t.parent[0] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int gi = 0; gi < g.generator_count(); ++gi) {
      int e = g.generators()[gi];
      for (int s : {1, -1}) {
        int y = g.mul(x, s > 0 ? e : g.inv(e));
        if (t.parent[y] < 0) {
          t.parent[y] = x;
          t.gen[y] = gi;
          t.sign[y] = s;
          q.push_back(y);
        }
      }
    }
  }
  return t;
}

}  // namespace

std::vector<Automorphism> automorphisms(const FiniteGroup& g, int cap) {
  if (g.order() > cap) throw ResourceError("automorphism enumeration cap exceeded");
  int n = g.order();
  int k = g.generator_count();
  CayleyTree tree = cayley_tree(g);
  // BFS order so parents are mapped before children.
  std::vector<int> order_idx(n);
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    auto depth = [&](int x) {
      int d = 0;
      while (x != 0) { x = tree.parent[x]; ++d; }
      return d;
    };
    return depth(a) < depth(b);
  });

  std::vector<std::vector<int>> candidates(k);
  for (int gi = 0; gi < k; ++gi) {
    int m = g.element_order(g.generators()[gi]);
    for (int x = 0; x < n; ++x)
      if (g.element_order(x) == m) candidates[gi].push_back(x);
  }

  std::vector<Automorphism> result;
  std::vector<int> img(k);
  std::vector<int> phi(n);

  auto try_images = [&]() {
    // Extend through the Cayley tree, then verify edge-multiplicativity and
    // bijectivity; that suffices for a homomorphism.
    phi[0] = 0;
    for (int x : order_idx) {
      if (x == 0) continue;
      int ie = img[tree.gen[x]];
      phi[x] = g.mul(phi[tree.parent[x]], tree.sign[x] > 0 ? ie : g.inv(ie));
    }
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (hit[phi[x]]) return;
      hit[phi[x]] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int gi = 0; gi < k; ++gi)
        if (phi[g.mul(x, g.generators()[gi])] != g.mul(phi[x], img[gi])) return;
    result.push_back(Automorphism{phi});
  };

  // Iterate over all candidate image tuples.
  std::vector<size_t> pos(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) img[i] = candidates[i][pos[i]];
    try_images();
    int i = k - 1;
    while (i >= 0 && ++pos[i] == candidates[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Automorphism compose(const FiniteGroup& g, const Automorphism& a, const Automorphism& b) {
  Automorphism r;
  r.map.resize(g.order());
  for (int x = 0; x < g.order(); ++x) r.map[x] = a.map[b.map[x]];
  return r;
}

Automorphism inverse_automorphism(const FiniteGroup& g, const Automorphism& a) {
  Automorphism r;
  r.map.resize(g.order());
  for (int x = 0; x < g.order(); ++x) r.map[a.map[x]] = x;
  return r;
}

GroupWord word_over_generators(const FiniteGroup& g, const std::vector<int>& gens,
                               int target) {
  if (target < 0 || target >= g.order()) throw UsageError("element out of range");
  std::vector<int> parent(g.order(), -1), via_gen(g.order(), -1), via_sign(g.order(), 0);
  parent[0] = 0;
  std::deque<int> q{0};
  while (!q.empty() && parent[target] < 0) {
    int x = q.front();
    q.pop_front();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      for (int s : {1, -1}) {
        int y = g.mul(x, s > 0 ? gens[gi] : g.inv(gens[gi]));
        if (parent[y] < 0) {
          parent[y] = x;
          via_gen[y] = static_cast<int>(gi);
          via_sign[y] = s;
          q.push_back(y);
        }
      }
    }
  }
  if (parent[target] < 0) throw UsageError("element not in generated subgroup");
  GroupWord w;
  int x = target;
  while (x != 0) {
    w.append(via_gen[x], via_sign[x]);
    x = parent[x];
  }
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

GroupWord word_for_element(const FiniteGroup& g, int target) {
  return word_over_generators(g, g.generators(), target);
}

}  // namespace isoprod

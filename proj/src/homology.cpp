#include "isoprod/homology.hpp"

#include <algorithm>
#include <deque>

namespace isoprod {

int CosetAction::act(int coset, int gen, int sign) const {
  if (sign > 0) return tables[gen][coset];
  if (!inv_tables.empty()) return inv_tables[gen][coset];
  const Permutation& p = tables[gen];
  for (int i = 0; i < index; ++i)
    if (p[i] == coset) return i;
  throw UsageError("broken coset table");
}

bool CosetAction::transitive() const {
  std::vector<char> seen(index, 0);
  seen[base] = 1;
  std::deque<int> q{base};
  int cnt = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (const auto& p : tables) {
      if (!seen[p[x]]) {
        seen[p[x]] = 1;
        ++cnt;
        q.push_back(p[x]);
      }
    }
  }
  return cnt == index;
}

DiagonalDatum product_monodromy(const GeneratingVector& v1, const GeneratingVector& v2) {
  if (v1.group != v2.group) throw UsageError("vectors over different groups");
  auto [p1, h1] = orbifold_presentation(v1);
  auto [p2, h2] = orbifold_presentation(v2);
  DiagonalDatum d;
  d.product = direct_product_presentation(p1, p2);
  d.images1 = h1.images;
  d.images2 = h2.images;
  return d;
}

CosetAction diagonal_coset_action(const FiniteGroup& g, const DiagonalDatum& d) {
  // each factor monodromy must be onto G
  for (const auto* imgs : {&d.images1, &d.images2}) {
    std::vector<char> seen(g.order(), 0);
    seen[0] = 1;
    std::deque<int> q{0};
    int cnt = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int e : *imgs)
        for (int y : {g.mul(x, e), g.mul(x, g.inv(e))})
          if (!seen[y]) {
            seen[y] = 1;
            ++cnt;
            q.push_back(y);
          }
    }
    if (cnt != g.order()) throw UsageError("monodromy not surjective onto G");
  }

  CosetAction a;
  a.group = &g;
  a.index = g.order();
  a.base = g.identity();
  int n1 = d.product.ngens1, n2 = d.product.ngens2;
  a.tables.resize(n1 + n2, Permutation(a.index));
  for (int t = 0; t < n1 + n2; ++t) {
    int left = t < n1 ? d.images1[t] : g.identity();       // f(t) = (left, right)
    int right = t < n1 ? g.identity() : d.images2[t - n1];
    for (int x = 0; x < a.index; ++x)
      a.tables[t][x] = g.mul(g.mul(g.inv(left), x), right);
  }
  a.inv_tables.reserve(a.tables.size());
  for (const auto& p : a.tables) a.inv_tables.push_back(inverse(p));
  return a;
}

std::pair<SchreierData, IntegerMatrix> schreier_rewrite(const Presentation& p,
                                                        const CosetAction& action) {
  if (!action.transitive()) throw UsageError("coset action not transitive");
  int n = action.index;
  int ngens = static_cast<int>(action.tables.size());
  if (ngens != p.ngens) throw UsageError("presentation/action generator mismatch");

  SchreierData sd;
  sd.action = &action;
  sd.transversal.assign(n, GroupWord{});
  sd.schreier.assign(n, std::vector<int>(ngens, -2));  // -2 unassigned, -1 tree

  // BFS spanning tree: shortest transversal words, generator order, +1
  // before -1.
  std::vector<char> visited(n, 0);
  visited[action.base] = 1;
  std::deque<int> q{action.base};
  struct TreeEdge { int from, gen, sign; };
  std::vector<TreeEdge> tree(n, {-1, -1, 0});
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int t = 0; t < ngens; ++t)
      for (int s : {1, -1}) {
        int y = action.act(x, t, s);
        if (!visited[y]) {
          visited[y] = 1;
          tree[y] = {x, t, s};
          sd.transversal[y] = sd.transversal[x];
          sd.transversal[y].append(t, s);
          q.push_back(y);
          // mark the corresponding forward pair as a tree edge
          if (s > 0)
            sd.schreier[x][t] = -1;
          else
            sd.schreier[y][t] = -1;
        }
      }
  }

  for (int x = 0; x < n; ++x)
    for (int t = 0; t < ngens; ++t)
      if (sd.schreier[x][t] == -2) sd.schreier[x][t] = sd.num_schreier++;

  // one row per (coset, relator): exponent sums of the rewritten conjugate
  IntegerMatrix m(n * static_cast<int>(p.relators.size()), sd.num_schreier);
  int row = 0;
  for (int x = 0; x < n; ++x)
    for (const auto& rel : p.relators) {
      int c = x;
      for (auto [t, s] : rel.letters) {
        if (s > 0) {
          int idx = sd.schreier[c][t];
          if (idx >= 0) m.at(row, idx) += 1;
          c = action.act(c, t, 1);
        } else {
          int c2 = action.act(c, t, -1);
          int idx = sd.schreier[c2][t];
          if (idx >= 0) m.at(row, idx) -= 1;
          c = c2;
        }
      }
      if (c != x) throw DatumError("relator does not stabilize its coset");
      ++row;
    }
  return {std::move(sd), std::move(m)};
}

std::vector<Integer> SchreierData::rewrite(const GroupWord& w) const {
  std::vector<Integer> v(num_schreier);
  int c = action->base;
  for (auto [t, s] : w.letters) {
    if (s > 0) {
      int idx = schreier[c][t];
      if (idx >= 0) v[idx] += 1;
      c = action->act(c, t, 1);
    } else {
      int c2 = action->act(c, t, -1);
      int idx = schreier[c2][t];
      if (idx >= 0) v[idx] -= 1;
      c = c2;
    }
  }
  if (c != action->base) throw UsageError("word does not lie in the subgroup");
  return v;
}

HomologyPipeline::HomologyPipeline(const FiniteGroup& g, const GeneratingVector& v1,
                                   const GeneratingVector& v2)
    : datum(product_monodromy(v1, v2)) {
  action = diagonal_coset_action(g, datum);
  auto [sd, m] = schreier_rewrite(datum.product.pres, action);
  schreier = std::move(sd);
  schreier.action = &action;
  relations = std::move(m);
  h1 = abelian_invariants(relations);
}

AbelianInvariants homology_h1(const FiniteGroup& g, const GeneratingVector& v1,
                              const GeneratingVector& v2) {
  return HomologyPipeline(g, v1, v2).h1;
}

GroupWord lift_central_element(const FiniteGroup& g, const DiagonalDatum& d, int z) {
  // BFS over G with the block-1 monodromy images as generators; the
  // resulting word, read in block-1 presentation generators, has f-image
  // (z, 1).
  return word_over_generators(g, d.images1, z);
}

std::vector<int> central_action_trivial_set(
    const HomologyPipeline& pipe, const std::function<GroupWord(int z)>& lift) {
  const FiniteGroup& g = *pipe.action.group;
  std::vector<int> result;
  for (int z : center(g)) {
    GroupWord zw = lift(z);
    GroupWord zw_inv = zw.inverse();
    bool trivial = true;
    for (int c = 0; c < pipe.action.index && trivial; ++c) {
      for (int t = 0; t < pipe.datum.product.pres.ngens && trivial; ++t) {
        int idx = pipe.schreier.schreier[c][t];
        if (idx < 0) continue;
        // s = rep_c * t * rep_{c.t}^-1
        GroupWord s = pipe.schreier.transversal[c];
        s.append(t, 1);
        s.append(pipe.schreier.transversal[pipe.action.act(c, t, 1)].inverse());
        GroupWord conj = zw;
        conj.append(s).append(zw_inv);
        std::vector<Integer> diff = pipe.schreier.rewrite(conj);
        diff[idx] -= 1;  // subtract the class of s itself
        trivial = pipe.h1.is_trivial_class(diff);
      }
    }
    if (trivial) result.push_back(z);
  }
  return result;
}

std::vector<int> central_action_trivial_set(const FiniteGroup& g,
                                            const GeneratingVector& v1,
                                            const GeneratingVector& v2) {
  HomologyPipeline pipe(g, v1, v2);
  return central_action_trivial_set(
      pipe, [&](int z) { return lift_central_element(g, pipe.datum, z); });
}

}  // namespace isoprod

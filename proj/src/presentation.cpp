#include "isoprod/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace isoprod {

void Presentation::check() const {
  for (const auto& r : relators)
    for (auto [g, s] : r.letters)
      if (g < 0 || g >= ngens) throw UsageError("relator letter out of range");
}

std::vector<int> GeneratingVector::branch_orders() const {
  std::vector<int> m;
  m.reserve(branch_part.size());
  for (int c : branch_part) m.push_back(group->element_order(c));
  return m;
}

std::vector<int> GeneratingVector::entries() const {
  std::vector<int> e = hyperbolic_part;
  e.insert(e.end(), branch_part.begin(), branch_part.end());
  return e;
}

ValidationReport validate_vector(const GeneratingVector& v) {
  const FiniteGroup& g = *v.group;
  ValidationReport rep;
  if (static_cast<int>(v.hyperbolic_part.size()) != 2 * v.base_genus) {
    rep.failures.push_back("hyperbolic part has wrong length");
    return rep;
  }

  int prod = g.identity();
  for (int i = 0; i < v.base_genus; ++i) {
    int a = v.hyperbolic_part[2 * i], b = v.hyperbolic_part[2 * i + 1];
    int comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
    prod = g.mul(prod, comm);
  }
  for (int c : v.branch_part) prod = g.mul(prod, c);
  rep.long_relation_ok = prod == g.identity();
  if (!rep.long_relation_ok) rep.failures.push_back("long relation fails");

  rep.orders_ok = true;
  for (int c : v.branch_part)
    if (g.element_order(c) < 2) rep.orders_ok = false;
  if (!rep.orders_ok) rep.failures.push_back("branch entry of order < 2");

  // closure of the entries
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  std::deque<int> q{0};
  int cnt = 1;
  auto ents = v.entries();
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e : ents)
      for (int y : {g.mul(x, e), g.mul(x, g.inv(e))})
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          q.push_back(y);
        }
  }
  rep.generates = cnt == g.order();
  if (!rep.generates) rep.failures.push_back("entries do not generate the group");
  return rep;
}

std::vector<int> stabilizer_set(const GeneratingVector& v) {
  const FiniteGroup& g = *v.group;
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (int c : v.branch_part) {
    int ord = g.element_order(c);
    int p = g.identity();
    for (int j = 1; j <= ord; ++j) {
      p = g.mul(p, c);
      for (int h = 0; h < g.order(); ++h) in[g.conj(h, p)] = 1;
    }
  }
  std::vector<int> sigma;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) sigma.push_back(x);
  return sigma;
}

bool disjoint(const GeneratingVector& v1, const GeneratingVector& v2) {
  if (v1.group != v2.group) throw UsageError("vectors over different groups");
  auto s1 = stabilizer_set(v1);
  auto s2 = stabilizer_set(v2);
  std::vector<int> meet;
  std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                        std::back_inserter(meet));
  return meet.size() == 1;  // only the identity
}

std::pair<Presentation, GroupHom> orbifold_presentation(const GeneratingVector& v) {
  const FiniteGroup& g = *v.group;
  int h = v.base_genus;
  int r = v.branch_count();
  Presentation p;
  p.ngens = 2 * h + r;
  for (int i = 0; i < h; ++i) {
    p.gen_names.push_back("a" + std::to_string(i + 1));
    p.gen_names.push_back("b" + std::to_string(i + 1));
  }
  for (int i = 0; i < r; ++i) p.gen_names.push_back("c" + std::to_string(i + 1));

  GroupWord longrel;
  for (int i = 0; i < h; ++i) {
    // (a^-1, b^-1) = a b a^-1 b^-1
    int a = 2 * i, b = 2 * i + 1;
    longrel.append(a, 1).append(b, 1).append(a, -1).append(b, -1);
  }
  auto orders = v.branch_orders();
  for (int i = 0; i < r; ++i) {
    longrel.append(2 * h + i, 1);
    p.relators.push_back(GroupWord::power(2 * h + i, orders[i]));
  }
  p.relators.push_back(longrel);

  GroupHom hom{&g, v.entries()};
  for (const auto& rel : p.relators)
    if (hom.eval(rel) != g.identity())
      throw DatumError("orbifold relator does not map to the identity");
  return {std::move(p), std::move(hom)};
}

ProductPresentation direct_product_presentation(const Presentation& p1,
                                                const Presentation& p2) {
  ProductPresentation pp;
  pp.ngens1 = p1.ngens;
  pp.ngens2 = p2.ngens;
  Presentation& p = pp.pres;
  p.ngens = p1.ngens + p2.ngens;
  for (int i = 0; i < p1.ngens; ++i)
    p.gen_names.push_back(i < static_cast<int>(p1.gen_names.size())
                              ? p1.gen_names[i] + "'"
                              : "u" + std::to_string(i + 1));
  for (int i = 0; i < p2.ngens; ++i)
    p.gen_names.push_back(i < static_cast<int>(p2.gen_names.size())
                              ? p2.gen_names[i] + "\""
                              : "v" + std::to_string(i + 1));
  for (const auto& r : p1.relators) p.relators.push_back(r);
  for (const auto& r : p2.relators) p.relators.push_back(r.shifted(p1.ngens));
  for (int i = 0; i < p1.ngens; ++i)
    for (int j = 0; j < p2.ngens; ++j) {
      GroupWord c;
      c.append(i, -1).append(p1.ngens + j, -1).append(i, 1).append(p1.ngens + j, 1);
      p.relators.push_back(std::move(c));
    }
  return pp;
}

}  // namespace isoprod

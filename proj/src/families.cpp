#include "isoprod/families.hpp"

#include <algorithm>

namespace isoprod {

namespace {

const std::vector<FamilyInfo> kTable = {
    {"a5-255", "A5", "<60,5>", 1, {2, 5, 5}, {3, 3, 3, 3}, {3, 3, 15}, {"1"}, ""},
    {"a5-555", "A5", "<60,5>", 1, {5, 5, 5}, {2, 2, 2, 3}, {10, 10}, {"1"}, ""},
    {"a5-335", "A5", "<60,5>", 2, {3, 3, 5}, {2, 2, 2, 2, 2}, {2, 2, 2, 6}, {"1"}, ""},
    {"s4xz2", "S4 x Z/2", "<48,48>", 3, {2, 4, 6}, {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 4}, {"1"}, ""},
    {"g32", "G(32)", "<32,27>", 2, {2, 2, 4, 4}, {2, 2, 2, 4}, {2, 2, 4, 8}, {"1"}, ""},
    {"beauville", "(Z/5)^2", "<25,2>", 0, {5, 5, 5}, {5, 5, 5}, {5, 5, 5}, {"1"}, ""},
    {"s4", "S4", "<24,12>", 3, {3, 4, 4}, {2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 8},
     {"1"}, ""},
    {"g16", "G(16)", "<16,3>", 2, {2, 2, 4, 4}, {2, 2, 4, 4}, {2, 2, 4, 8}, {"1"}, ""},
    {"d4xz2", "D4 x Z/2", "<16,11>", 4, {2, 2, 2, 4}, {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 4, 4}, {"1", "(r^2,0)"}, ""},
    {"z2p4", "(Z/2)^4", "<16,14>", 4, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 2},
     {4, 4, 4, 4}, {"1"}, ""},
    {"z3sq", "(Z/3)^2", "<9,2>", 2, {3, 3, 3, 3}, {3, 3, 3, 3}, {3, 3, 3, 3, 3},
     {"1"}, ""},
    {"z2p3", "(Z/2)^3", "<8,5>", 5, {2, 2, 2, 2, 2}, {2, 2, 2, 2, 2, 2},
     {2, 2, 2, 2, 4, 4}, {"1"},
     "the combinatorial lower bound 48 is not sharp: the actual order is 96 or "
     "192 depending on the branch-point configuration"},
};

GeneratingVector genus0(const FiniteGroup& g, std::vector<int> branch) {
  GeneratingVector v;
  v.group = &g;
  v.base_genus = 0;
  v.branch_part = std::move(branch);
  return v;
}

void fill_perm(FamilyDatum& d, int degree,
               const std::vector<std::pair<std::string, std::string>>& gens,
               const std::vector<std::string>& w1,
               const std::vector<std::string>& w2) {
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  for (const auto& [name, cycles] : gens) {
    names.push_back(name);
    perms.push_back(parse_cycles(cycles, degree));
  }
  PermGroup pg = group_from_permutations(degree, perms, names);
  auto idx = [&](const std::string& s) { return pg.index_of(parse_cycles(s, degree)); };
  std::vector<int> b1, b2;
  for (const auto& s : w1) b1.push_back(idx(s));
  for (const auto& s : w2) b2.push_back(idx(s));
  d.group = std::move(pg.group);
  d.v1 = genus0(d.group, std::move(b1));
  d.v2 = genus0(d.group, std::move(b2));
}

void fill_abelian(FamilyDatum& d, const std::vector<int>& factors,
                  const std::vector<std::vector<int>>& w1,
                  const std::vector<std::vector<int>>& w2) {
  d.group = group_from_abelian_invariants(factors);
  auto idx = [&](std::vector<int> coords) {
    for (size_t i = 0; i < coords.size(); ++i) {
      int f = factors[i];
      coords[i] = ((coords[i] % f) + f) % f;
    }
    return abelian_index(factors, coords);
  };
  std::vector<int> b1, b2;
  for (const auto& c : w1) b1.push_back(idx(c));
  for (const auto& c : w2) b2.push_back(idx(c));
  d.v1 = genus0(d.group, std::move(b1));
  d.v2 = genus0(d.group, std::move(b2));
}

GroupWord comm(int a, int b) {  // a^-1 b^-1 a b
  GroupWord w;
  w.append(a, -1).append(b, -1).append(a, 1).append(b, 1);
  return w;
}

GroupWord word(const std::vector<int>& gens) {
  GroupWord w;
  for (int g : gens) w.append(g, 1);
  return w;
}

// Realize a presented group and re-tag it with the given generating subset
// (the presentation may carry redundant generators).
void fill_fp(FamilyDatum& d, const Presentation& p, const std::vector<int>& keep_gens,
             const std::vector<std::string>& keep_names,
             const std::vector<GroupWord>& w1, const std::vector<GroupWord>& w2,
             int coset_cap) {
  auto [g, hom] = realize_presentation(p, coset_cap);
  hom.target = &g;
  std::vector<int> b1, b2;
  for (const auto& w : w1) b1.push_back(hom.eval(w));
  for (const auto& w : w2) b2.push_back(hom.eval(w));
  int n = g.order();
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = g.mul(a, b);
  std::vector<int> gens;
  for (int k : keep_gens) gens.push_back(hom.images[k]);
  d.group = FiniteGroup(n, std::move(table), std::move(gens), keep_names);
  d.v1 = genus0(d.group, std::move(b1));
  d.v2 = genus0(d.group, std::move(b2));
}

void fill_g32(FamilyDatum& d, int coset_cap) {
  Presentation p;
  p.ngens = 5;
  p.gen_names = {"x1", "x2", "x3", "x4", "x5"};
  for (int i = 0; i < 5; ++i) p.relators.push_back(GroupWord::power(i, 2));
  p.relators.push_back(comm(0, 1).append(3, 1));  // [x1,x2] = x4
  p.relators.push_back(comm(0, 2).append(4, 1));  // [x1,x3] = x5
  for (auto [j, k] : {std::pair{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                      {2, 3}, {2, 4}, {3, 4}})
    p.relators.push_back(comm(j, k));
  // x4, x5 are redundant generators; keep x1,x2,x3 as the stored set
  fill_fp(d, p, {0, 1, 2}, {"x1", "x2", "x3"},
          {word({1, 2, 3}), word({1}), word({0, 1, 2, 4}), word({0, 1})},
          {word({0, 3, 4}), word({1, 2, 3, 4}), word({1, 3, 4}), word({0, 2, 3})},
          coset_cap);
}

void fill_g16(FamilyDatum& d, int coset_cap) {
  Presentation p;
  p.ngens = 3;
  p.gen_names = {"x", "y", "z"};
  p.relators.push_back(GroupWord::power(0, 4));
  p.relators.push_back(GroupWord::power(1, 2));
  p.relators.push_back(GroupWord::power(2, 2));
  p.relators.push_back(comm(0, 1));
  p.relators.push_back(comm(1, 2));
  p.relators.push_back(comm(2, 0).append(1, 1));  // [z,x] = y
  GroupWord xyz = word({0, 1, 2});
  fill_fp(d, p, {0, 1, 2}, {"x", "y", "z"},
          {word({2}), word({2}), word({0}), GroupWord::power(0, -1)},
          {word({2, 0, 0, 1}), word({2, 0, 0, 1}), xyz, xyz.inverse()}, coset_cap);
}

void fill_d4xz2(FamilyDatum& d) {
  fill_perm(d, 6, {{"r", "(1 2 3 4)"}, {"s", "(1 3)"}, {"z", "(5 6)"}},
            {"(5 6)", "(1 3)(5 6)", "(1 4)(2 3)", "(1 2 3 4)"},
            {"(1 3)", "(1 2)(3 4)(5 6)", "(2 4)", "(1 2)(3 4)(5 6)",
             "(1 3)(2 4)(5 6)", "(1 3)(2 4)(5 6)"});
  // display names matching the (w, eps) notation
  int r = d.group.generators()[0], s = d.group.generators()[1],
      z = d.group.generators()[2];
  static const char* dn[8] = {"1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"};
  std::vector<std::string> names(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      int base = d.group.power(r, i);
      if (j) base = d.group.mul(base, s);
      for (int k = 0; k < 2; ++k) {
        int e = k ? d.group.mul(base, z) : base;
        if (e == d.group.identity())
          names[e] = "1";
        else
          names[e] = std::string("(") + dn[4 * j + i] + "," + (k ? "1" : "0") + ")";
      }
    }
  d.group.set_element_names(std::move(names));
}

}  // namespace

const std::vector<FamilyInfo>& family_table() { return kTable; }

const FamilyInfo* find_family(const std::string& name) {
  auto it = std::find_if(kTable.begin(), kTable.end(),
                         [&](const FamilyInfo& f) { return f.name == name; });
  return it == kTable.end() ? nullptr : &*it;
}

std::unique_ptr<FamilyDatum> realize_family(const std::string& name, int coset_cap) {
  const FamilyInfo* info = find_family(name);
  if (!info) throw UsageError("unknown family: " + name);
  auto d = std::make_unique<FamilyDatum>();
  d->info = info;

  std::vector<std::pair<std::string, std::string>> a5 = {{"a", "(1 2 3 4 5)"},
                                                         {"b", "(1 2 3)"}};
  if (name == "a5-255") {
    fill_perm(*d, 5, a5, {"(2 4)(3 5)", "(1 3 4 5 2)", "(1 2 3 4 5)"},
              {"(1 2 3)", "(3 4 5)", "(2 4 3)", "(1 5 2)"});
  } else if (name == "a5-555") {
    fill_perm(*d, 5, a5, {"(1 2 5 3 4)", "(1 2 4 5 3)", "(1 2 3 4 5)"},
              {"(1 2)(3 4)", "(2 4)(3 5)", "(1 4)(3 5)", "(2 4 3)"});
  } else if (name == "a5-335") {
    fill_perm(*d, 5, a5, {"(1 2 3)", "(3 4 5)", "(1 5 4 3 2)"},
              {"(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)", "(1 4)(2 5)", "(1 4)(2 5)"});
  } else if (name == "s4xz2") {
    fill_perm(*d, 6, {{"a", "(1 2 3 4)"}, {"b", "(1 2)"}, {"z", "(5 6)"}},
              {"(1 2)", "(1 2 3 4)(5 6)", "(2 4 3)(5 6)"},
              {"(1 2)(3 4)(5 6)", "(1 2)(5 6)", "(3 4)(5 6)", "(1 4)(2 3)(5 6)",
               "(2 3)(5 6)", "(1 4)(5 6)"});
  } else if (name == "g32") {
    fill_g32(*d, coset_cap);
  } else if (name == "beauville") {
    fill_abelian(*d, {5, 5}, {{1, 0}, {0, 1}, {-1, -1}},
                 {{1, -1}, {1, 2}, {-2, -1}});
  } else if (name == "s4") {
    fill_perm(*d, 4, {{"a", "(1 2 3 4)"}, {"b", "(1 2)"}},
              {"(1 2 3)", "(1 2 3 4)", "(1 2 4 3)"},
              {"(1 2)", "(1 2)", "(2 3)", "(2 3)", "(3 4)", "(3 4)"});
  } else if (name == "g16") {
    fill_g16(*d, coset_cap);
  } else if (name == "d4xz2") {
    fill_d4xz2(*d);
  } else if (name == "z2p4") {
    fill_abelian(*d, {2, 2, 2, 2},
                 {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}},
                 {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  } else if (name == "z3sq") {
    fill_abelian(*d, {3, 3}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                 {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
  } else if (name == "z2p3") {
    fill_abelian(*d, {2, 2, 2},
                 {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 1}},
                 {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  }
  return d;
}

}  // namespace isoprod

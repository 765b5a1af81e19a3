#include "isoprod/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace isoprod {

namespace {

struct Line {
  int no;
  std::string text;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    size_t pos;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

enum class Kind { kPerm, kAbelian, kFp };

struct GroupSpec {
  Kind kind;
  int degree = 0;            // perm
  std::vector<int> factors;  // abelian
};

// Word in the group's named generators: tokens separated by spaces or '*',
// each `name` or `name^exp`; the bare token `1` is the empty word.
GroupWord parse_word(const std::string& text, const FiniteGroup& g, int line) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == '*') c = ' ';
  GroupWord w;
  for (const std::string& tok : split_ws(spaced)) {
    if (tok == "1") continue;
    std::string name = tok;
    int exp = 1;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      exp = parse_int(tok.substr(caret + 1), line);
    }
    int gi = -1;
    for (int i = 0; i < g.generator_count(); ++i)
      if (g.generator_name(i) == name) gi = i;
    if (gi < 0) throw ParseError(line, "unknown generator '" + name + "'");
    w.append(GroupWord::power(gi, exp));
  }
  return w;
}

std::vector<int> parse_tuple(const std::string& text, int k, int line) {
  std::string inner = trim(text);
  if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
    throw ParseError(line, "malformed tuple '" + text + "'");
  inner = inner.substr(1, inner.size() - 2);
  std::vector<int> out;
  std::istringstream is(inner);
  std::string part;
  while (std::getline(is, part, ',')) out.push_back(parse_int(trim(part), line));
  if (static_cast<int>(out.size()) != k)
    throw ParseError(line, "tuple has " + std::to_string(out.size()) +
                               " entries, expected " + std::to_string(k));
  return out;
}

int parse_element(const std::string& text, const GroupSpec& spec,
                  const InputDatum& d, const std::vector<Permutation>& perm_elems,
                  int line) {
  if (text.front() == '(' && spec.kind != Kind::kFp) {
    if (spec.kind == Kind::kPerm) {
      Permutation p;
      try {
        p = parse_cycles(text, spec.degree);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      for (size_t i = 0; i < perm_elems.size(); ++i)
        if (perm_elems[i] == p) return static_cast<int>(i);
      throw ParseError(line, "permutation not in the generated group: " + text);
    }
    auto coords = parse_tuple(text, static_cast<int>(spec.factors.size()), line);
    for (size_t i = 0; i < coords.size(); ++i) {
      int f = spec.factors[i];
      coords[i] = ((coords[i] % f) + f) % f;
    }
    return abelian_index(spec.factors, coords);
  }
  return d.group.eval(parse_word(text, d.group, line));
}

GroupSpec build_group(const std::vector<Line>& lines, InputDatum& d,
                      std::vector<Permutation>& perm_elems, int coset_cap) {
  if (lines.empty()) throw ParseError(0, "empty [group] section");
  auto head = split_ws(lines[0].text);
  GroupSpec spec;
  spec.kind = Kind::kPerm;

  if (head[0] == "perm") {
    if (head.size() != 2) throw ParseError(lines[0].no, "usage: perm <degree>");
    spec.degree = parse_int(head[1], lines[0].no);
    std::vector<Permutation> gens;
    std::vector<std::string> names;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto toks = split_ws(lines[i].text);
      size_t eq = lines[i].text.find('=');
      if (toks.size() < 2 || toks[0] != "gen" || eq == std::string::npos)
        throw ParseError(lines[i].no, "usage: gen <name> = <cycles>");
      names.push_back(toks[1]);
      try {
        gens.push_back(parse_cycles(lines[i].text.substr(eq + 1), spec.degree));
      } catch (const std::exception& e) {
        throw ParseError(lines[i].no, e.what());
      }
    }
    if (gens.empty()) throw ParseError(lines[0].no, "perm group needs generators");
    PermGroup pg = group_from_permutations(spec.degree, gens, names);
    perm_elems = std::move(pg.elements);
    d.group = std::move(pg.group);
    return spec;
  }

  if (head[0] == "abelian") {
    spec.kind = Kind::kAbelian;
    for (size_t i = 1; i < head.size(); ++i)
      spec.factors.push_back(parse_int(head[i], lines[0].no));
    if (spec.factors.empty())
      throw ParseError(lines[0].no, "usage: abelian d1 d2 ...");
    if (lines.size() > 1)
      throw ParseError(lines[1].no, "unexpected line in abelian group section");
    d.group = group_from_abelian_invariants(spec.factors);
    return spec;
  }

  if (head[0] == "fp") {
    spec.kind = Kind::kFp;
    if (head.size() != 2) throw ParseError(lines[0].no, "usage: fp <ngens>");
    Presentation p;
    p.ngens = parse_int(head[1], lines[0].no);
    if (p.ngens <= 0) throw ParseError(lines[0].no, "fp group needs generators");
    for (int i = 0; i < p.ngens; ++i) p.gen_names.push_back("x" + std::to_string(i + 1));
    std::vector<std::pair<int, std::string>> rel_lines;
    for (size_t i = 1; i < lines.size(); ++i) {
      auto toks = split_ws(lines[i].text);
      if (toks[0] == "names") {
        if (static_cast<int>(toks.size()) != p.ngens + 1)
          throw ParseError(lines[i].no, "names line needs one name per generator");
        p.gen_names.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "rel") {
        rel_lines.emplace_back(lines[i].no,
                               trim(lines[i].text.substr(lines[i].text.find("rel") + 3)));
      } else {
        throw ParseError(lines[i].no, "expected 'names' or 'rel' line");
      }
    }
    // a scratch group whose generator names drive word parsing
    FiniteGroup scratch;
    {
      // free-abelian stand-in is not available; parse relators against a
      // one-element group with the right generator names
      std::vector<int> table{0};
      std::vector<int> gens(p.ngens, 0);
      scratch = FiniteGroup(1, table, gens, p.gen_names);
    }
    for (auto& [no, text] : rel_lines)
      p.relators.push_back(parse_word(text, scratch, no));
    auto [g, hom] = realize_presentation(p, coset_cap);
    d.group = std::move(g);
    return spec;
  }

  throw ParseError(lines[0].no, "unknown group kind '" + head[0] +
                                    "' (expected perm, abelian, or fp)");
}

void build_vector(const std::vector<Line>& lines, const GroupSpec& spec,
                  InputDatum& d, const std::vector<Permutation>& perm_elems,
                  GeneratingVector& out, const char* section) {
  if (lines.empty())
    throw ParseError(0, std::string("missing or empty [") + section + "] section");
  out.group = &d.group;
  out.base_genus = 0;
  size_t first = 0;
  auto head = split_ws(lines[0].text);
  if (head[0] == "genus") {
    if (head.size() != 2) throw ParseError(lines[0].no, "usage: genus <g>");
    out.base_genus = parse_int(head[1], lines[0].no);
    if (out.base_genus < 0) throw ParseError(lines[0].no, "genus must be >= 0");
    first = 1;
  }
  std::vector<int> elems;
  for (size_t i = first; i < lines.size(); ++i)
    elems.push_back(parse_element(lines[i].text, spec, d, perm_elems, lines[i].no));
  if (static_cast<int>(elems.size()) < 2 * out.base_genus)
    throw ParseError(lines.back().no, "fewer elements than the genus requires");
  out.hyperbolic_part.assign(elems.begin(), elems.begin() + 2 * out.base_genus);
  out.branch_part.assign(elems.begin() + 2 * out.base_genus, elems.end());
}

}  // namespace

std::unique_ptr<InputDatum> parse_input_text(const std::string& text, int coset_cap) {
  std::vector<Line> group_lines, v1_lines, v2_lines;
  std::vector<Line>* current = nullptr;

  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line == "[group]")
        current = &group_lines;
      else if (line == "[vector1]")
        current = &v1_lines;
      else if (line == "[vector2]")
        current = &v2_lines;
      else
        throw ParseError(no, "unknown section " + line);
      continue;
    }
    if (!current) throw ParseError(no, "content before any section header");
    current->push_back({no, line});
  }
  if (group_lines.empty()) throw ParseError(no, "missing [group] section");

  auto d = std::make_unique<InputDatum>();
  std::vector<Permutation> perm_elems;
  GroupSpec spec = build_group(group_lines, *d, perm_elems, coset_cap);
  build_vector(v1_lines, spec, *d, perm_elems, d->v1, "vector1");
  build_vector(v2_lines, spec, *d, perm_elems, d->v2, "vector2");
  return d;
}

std::unique_ptr<InputDatum> parse_input_file(const std::string& path, int coset_cap) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), coset_cap);
}

}  // namespace isoprod

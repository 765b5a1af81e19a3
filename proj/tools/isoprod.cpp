#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "isoprod/autbound.hpp"
#include "isoprod/families.hpp"
#include "isoprod/homology.hpp"
#include "isoprod/input.hpp"
#include "isoprod/invariants.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace isoprod;

namespace {

constexpr const char* kSchema = "isoprod/1";

int coset_cap_from_env() {
  const char* s = std::getenv("ISOPROD_COSET_CAP");
  if (!s || !*s) return kDefaultCosetCap;
  int v = std::atoi(s);
  if (v <= 0) throw UsageError("ISOPROD_COSET_CAP must be a positive integer");
  return v;
}

// The datum under study, whichever way it was loaded.
struct Loaded {
  std::unique_ptr<FamilyDatum> fam;
  std::unique_ptr<InputDatum> input;

  const FiniteGroup& group() const { return fam ? fam->group : input->group; }
  const GeneratingVector& v1() const { return fam ? fam->v1 : input->v1; }
  const GeneratingVector& v2() const { return fam ? fam->v2 : input->v2; }
  const FamilyInfo* info() const { return fam ? fam->info : nullptr; }
};

Loaded load(const std::string& family, const std::string& input_path) {
  if (family.empty() == input_path.empty())
    throw UsageError("exactly one of --family and --input is required");
  Loaded l;
  if (!family.empty())
    l.fam = realize_family(family, coset_cap_from_env());
  else
    l.input = parse_input_file(input_path, coset_cap_from_env());
  return l;
}

std::string orders_str(const std::vector<int>& orders) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  os << "]";
  return os.str();
}

std::string h1_str(const AbelianInvariants& h) {
  std::ostringstream os;
  if (h.rank > 0) os << "Z^" << h.rank;
  for (size_t i = 0; i < h.torsion.size(); ++i)
    os << (i || h.rank ? " x " : "") << "Z/" << h.torsion[i];
  if (h.rank == 0 && h.torsion.empty()) os << "0";
  return os.str();
}

std::vector<long long> torsion_list(const AbelianInvariants& h) {
  std::vector<long long> out;
  for (const Integer& d : h.torsion) out.push_back(d.convert_to<long long>());
  return out;
}

std::vector<std::string> element_names(const FiniteGroup& g, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(g.element_name(x));
  return out;
}

json validation_json(const ValidationReport& r) {
  return {{"valid", r.valid()},
          {"long_relation_ok", r.long_relation_ok},
          {"generates", r.generates},
          {"orders_ok", r.orders_ok},
          {"failures", r.failures}};
}

// ---- validate ----------------------------------------------------------

int cmd_validate(const Loaded& l, bool as_json, bool verbose) {
  auto r1 = validate_vector(l.v1());
  auto r2 = validate_vector(l.v2());
  bool both_valid = r1.valid() && r2.valid();
  bool free_action = both_valid && disjoint(l.v1(), l.v2());

  std::optional<SurfaceInvariants> inv;
  std::string inv_error;
  if (free_action) {
    try {
      inv = surface_invariants(l.group(), l.v1(), l.v2());
    } catch (const std::exception& e) {
      inv_error = e.what();
    }
  }
  bool ok = free_action && inv.has_value();

  if (as_json) {
    json j{{"schema", kSchema},
           {"command", "validate"},
           {"group_order", l.group().order()},
           {"vector1", validation_json(r1)},
           {"vector2", validation_json(r2)},
           {"disjoint", free_action},
           {"ok", ok}};
    if (inv)
      j["invariants"] = {{"g1", inv->g1}, {"g2", inv->g2}, {"q", inv->q},
                         {"p_g", inv->p_g}, {"chi", inv->chi},
                         {"K2", inv->Ksq}, {"e", inv->e}};
    if (!inv_error.empty()) j["error"] = inv_error;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  std::cout << "group order " << l.group().order() << "\n";
  for (int side = 1; side <= 2; ++side) {
    const auto& v = side == 1 ? l.v1() : l.v2();
    const auto& r = side == 1 ? r1 : r2;
    std::string t = orders_str(v.branch_orders());
    std::cout << "V" << side << ": type (" << v.base_genus << "; "
              << t.substr(1, t.size() - 2) << ") "
              << (r.valid() ? "valid" : "INVALID") << "\n";
    for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
    if (verbose && r.valid())
      std::cout << "  |Sigma(V" << side << ")| = " << stabilizer_set(v).size()
                << ", genus of covering curve = " << curve_genus(v) << "\n";
  }
  if (both_valid)
    std::cout << "disjoint stabilizer sets (free action): "
              << (free_action ? "yes" : "NO") << "\n";
  if (inv)
    std::cout << "chi=" << inv->chi << " q=" << inv->q << " p_g=" << inv->p_g
              << " K^2=" << inv->Ksq << " e=" << inv->e << " (g1=" << inv->g1
              << ", g2=" << inv->g2 << ")\n";
  if (!inv_error.empty()) std::cout << "invariant error: " << inv_error << "\n";
  std::cout << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

// ---- homology ----------------------------------------------------------

int cmd_homology(const Loaded& l, bool as_json, bool verbose) {
  HomologyPipeline pipe(l.group(), l.v1(), l.v2());
  std::vector<int> trivial = central_action_trivial_set(
      pipe, [&](int z) { return lift_central_element(l.group(), pipe.datum, z); });
  auto names = element_names(l.group(), trivial);

  if (as_json) {
    json j{{"schema", kSchema},
           {"command", "homology"},
           {"rank", pipe.h1.rank},
           {"invariant_factors", torsion_list(pipe.h1)},
           {"h1", h1_str(pipe.h1)},
           {"center_order", center(l.group()).size()},
           {"trivial_central_set", names}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "H1(S,Z) = " << h1_str(pipe.h1) << "  (rank " << pipe.h1.rank
            << ", invariant factors";
  for (const Integer& d : pipe.h1.torsion) std::cout << " " << d;
  std::cout << ")\n";
  if (verbose)
    std::cout << "coset index " << pipe.action.index << ", "
              << pipe.schreier.num_schreier << " Schreier generators, "
              << pipe.relations.rows() << " relation rows\n";
  std::cout << "central elements acting trivially on H1: {";
  for (size_t i = 0; i < names.size(); ++i) std::cout << (i ? ", " : " ") << names[i];
  std::cout << " }\n";
  return 0;
}

// ---- autbound ----------------------------------------------------------

json autbound_json(const AutBoundReport& r, const FamilyInfo* info) {
  json j{{"h_order", r.h_order},
         {"inn_order", r.inn_order},
         {"center_order", r.center_order},
         {"centralizer_certified", {r.centralizer_certified_1, r.centralizer_certified_2}},
         {"n_prime_bounds", {r.n_prime_bound_1, r.n_prime_bound_2}},
         {"lower", r.lower},
         {"established", r.established},
         {"notes", r.notes}};
  if (r.upper)
    j["upper"] = *r.upper;
  else
    j["upper"] = nullptr;
  if (info && !info->aut_note.empty()) j["note"] = info->aut_note;
  return j;
}

void print_autbound(const AutBoundReport& r, const FamilyInfo* info) {
  std::cout << "|Z(G)| = " << r.center_order << ", |Inn(G)| = " << r.inn_order
            << ", |H| = " << r.h_order << "\n";
  std::cout << "centralizer = Z(G) certified: V1 "
            << (r.centralizer_certified_1 ? "yes" : "no") << ", V2 "
            << (r.centralizer_certified_2 ? "yes" : "no") << "\n";
  std::cout << "|N'| bounds: V1 <= " << r.n_prime_bound_1 << ", V2 <= "
            << r.n_prime_bound_2 << "\n";
  std::cout << "|Aut_Q(S)| >= " << r.lower
            << (r.established ? " (established: exact value)" : " (lower bound)")
            << "\n";
  if (r.upper)
    std::cout << "|Aut_Q(S)| <= " << *r.upper << "\n";
  else
    std::cout << "upper bound: not determined\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  if (info && !info->aut_note.empty()) std::cout << "note: " << info->aut_note << "\n";
}

int cmd_autbound(const Loaded& l, bool as_json, bool /*verbose*/) {
  AutBoundReport r = aut_q_bound(l.group(), l.v1(), l.v2());
  if (as_json) {
    json j = autbound_json(r, l.info());
    j["schema"] = kSchema;
    j["command"] = "autbound";
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  print_autbound(r, l.info());
  return 0;
}

// ---- report-all --------------------------------------------------------

int cmd_report_all(bool as_json, bool /*verbose*/) {
  int cap = coset_cap_from_env();
  json rows = json::array();
  bool all_ok = true;

  for (const FamilyInfo& info : family_table()) {
    auto d = realize_family(info.name, cap);
    std::vector<std::string> mismatches;

    auto r1 = validate_vector(d->v1), r2 = validate_vector(d->v2);
    if (!r1.valid() || !r2.valid()) mismatches.push_back("vector validation failed");
    bool free_action = r1.valid() && r2.valid() && disjoint(d->v1, d->v2);
    if (!free_action) mismatches.push_back("stabilizer sets not disjoint");

    auto sorted = [](std::vector<int> v) { std::sort(v.begin(), v.end()); return v; };
    if (sorted(d->v1.branch_orders()) != info.type1 ||
        sorted(d->v2.branch_orders()) != info.type2)
      mismatches.push_back("branch orders differ from the recorded types");

    SurfaceInvariants inv{};
    if (free_action) {
      inv = surface_invariants(d->group, d->v1, d->v2);
      if (inv.chi != 1 || inv.q != 0 || inv.p_g != 0)
        mismatches.push_back("unexpected numerical invariants");
    }

    HomologyPipeline pipe(d->group, d->v1, d->v2);
    std::vector<long long> h1 = torsion_list(pipe.h1);
    std::vector<long long> expected_h1(info.expected_h1.begin(), info.expected_h1.end());
    if (pipe.h1.rank != 0 || h1 != expected_h1) mismatches.push_back("H1 mismatch");

    std::vector<int> trivial = central_action_trivial_set(
        pipe, [&](int z) { return lift_central_element(d->group, pipe.datum, z); });
    auto trivial_names = element_names(d->group, trivial);
    auto sorted_names = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    if (sorted_names(trivial_names) != sorted_names(info.expected_trivial))
      mismatches.push_back("trivial central set mismatch");

    AutBoundReport ab = aut_q_bound(d->group, d->v1, d->v2);

    if (!mismatches.empty()) all_ok = false;

    if (as_json) {
      rows.push_back({{"family", info.name},
                      {"group", info.display},
                      {"group_id", info.small_group_id},
                      {"T1", info.type1},
                      {"T2", info.type2},
                      {"D", info.moduli_dim},
                      {"chi", inv.chi},
                      {"q", inv.q},
                      {"p_g", inv.p_g},
                      {"h1", torsion_list(pipe.h1)},
                      {"h1_expected", expected_h1},
                      {"trivial_central_set", trivial_names},
                      {"autbound", autbound_json(ab, &info)},
                      {"ok", mismatches.empty()},
                      {"mismatches", mismatches}});
    } else {
      std::cout << info.name << ": " << info.display << " " << info.small_group_id
                << "  T1=" << orders_str(info.type1)
                << " T2=" << orders_str(info.type2) << " D=" << info.moduli_dim
                << "\n";
      std::cout << "  chi=" << inv.chi << " q=" << inv.q << " p_g=" << inv.p_g
                << "  H1 = " << h1_str(pipe.h1) << "\n";
      std::cout << "  trivial central set: {";
      for (size_t i = 0; i < trivial_names.size(); ++i)
        std::cout << (i ? ", " : " ") << trivial_names[i];
      std::cout << " }\n";
      std::cout << "  Aut_Q: lower " << ab.lower
                << (ab.established ? " (exact)" : "") << ", upper ";
      if (ab.upper)
        std::cout << *ab.upper;
      else
        std::cout << "n/a";
      std::cout << ", |H| = " << ab.h_order << "\n";
      if (mismatches.empty()) {
        std::cout << "  OK\n";
      } else {
        for (const auto& m : mismatches) std::cout << "  MISMATCH: " << m << "\n";
      }
    }
  }

  if (as_json) {
    json j{{"schema", kSchema}, {"command", "report-all"}, {"ok", all_ok},
           {"families", rows}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (all_ok ? "all families OK" : "MISMATCHES FOUND") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surfaces isogenous to a product: invariants, H1, and Aut_Q bounds"};
  app.require_subcommand(1);

  std::string family, input_path;
  bool as_json = false, verbose = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_flag("--verbose", verbose, "extra diagnostics");

  auto add_datum_opts = [&](CLI::App* sub) {
    sub->fallthrough();  // accept the global flags after the subcommand too
    sub->add_option("--family", family, "name of an embedded family");
    sub->add_option("--input", input_path, "datum file ([group]/[vector1]/[vector2])");
  };
  CLI::App* validate = app.add_subcommand("validate", "check a datum and print invariants");
  CLI::App* homology = app.add_subcommand("homology", "compute H1(S,Z) and the trivial central set");
  CLI::App* autbound = app.add_subcommand("autbound", "combinatorial bounds on Aut_Q(S)");
  app.add_subcommand("report-all", "regression table over all embedded families")
      ->fallthrough();
  add_datum_opts(validate);
  add_datum_opts(homology);
  add_datum_opts(autbound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("report-all")) return cmd_report_all(as_json, verbose);
    Loaded l = load(family, input_path);
    if (app.got_subcommand("validate")) return cmd_validate(l, as_json, verbose);
    if (app.got_subcommand("homology")) return cmd_homology(l, as_json, verbose);
    return cmd_autbound(l, as_json, verbose);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

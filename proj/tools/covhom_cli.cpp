// Command line front end: analyze covers, split Hodge pieces, cross-check
// the combinatorial oracle, classify permutation characters, and run the
// hyperelliptic model. Exit codes: 0 success, 1 rejected input, 2 breached
// internal invariant (including an oracle mismatch).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covhom/cell_complex.hpp"
#include "covhom/character_table.hpp"
#include "covhom/chevalley_weil.hpp"
#include "covhom/cover_spec.hpp"
#include "covhom/error.hpp"
#include "covhom/hyperelliptic.hpp"
#include "covhom/spec_io.hpp"

using json = nlohmann::ordered_json;
using namespace covhom;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) fail("ParseError", "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Translates the JSON input document into the line grammar so both input
// routes share one parser and one error vocabulary.
std::string text_from_json(const std::string& raw) {
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::exception& e) {
    fail("ParseError", std::string("json input: ") + e.what());
  }
  try {
    std::ostringstream out;
    if (!doc.contains("group") || !doc["group"].is_array())
      fail("ParseError", "json input needs a 'group' array of cycle strings");
    std::string gens;
    for (const auto& c : doc["group"]) {
      if (!gens.empty()) gens += ";";
      gens += c.get<std::string>();
    }
    out << "group: " << gens << "\n";
    if (doc.contains("base")) {
      const auto& b = doc["base"];
      const std::string kind = b.is_string() ? b.get<std::string>() : b.at("kind").get<std::string>();
      if (kind == "disk") {
        out << "base: disk\n";
      } else if (kind == "closed") {
        const long g = b.is_object() && b.contains("genus") ? b["genus"].get<long>() : 0;
        out << "base: closed g=" << g << "\n";
      } else {
        fail("ParseError", "json input: base kind must be 'closed' or 'disk'");
      }
    }
    if (doc.contains("hyperbolic")) {
      out << "hyperbolic:";
      int i = 0;
      for (const auto& pair : doc["hyperbolic"]) {
        ++i;
        out << " a" << i << "=" << pair.at(0).get<std::string>()
            << " b" << i << "=" << pair.at(1).get<std::string>();
      }
      out << "\n";
    }
    if (doc.contains("parabolic")) {
      out << "parabolic:";
      int i = 0;
      for (const auto& w : doc["parabolic"]) out << " l" << ++i << "=" << w.get<std::string>();
      out << "\n";
    }
    if (doc.contains("stabilizer")) {
      out << "stabilizer:";
      for (const auto& w : doc["stabilizer"]) out << " " << w.get<std::string>();
      out << "\n";
    }
    return out.str();
  } catch (const json::exception& e) {
    fail("ParseError", std::string("json input: ") + e.what());
  }
}

ParsedInput load_input(const std::string& path, bool json_in, long max_order) {
  const std::string raw = slurp(path);
  return parse_input_text(json_in ? text_from_json(raw) : raw, max_order);
}

json values_json(const ClassFunction& chi) {
  json arr = json::array();
  for (const Cyclo& v : chi.values()) arr.push_back(v.str());
  return arr;
}

json module_json(const ModuleExpr& m) {
  return json{{"multiplicities", m.multiplicities()}, {"expr", m.str()}};
}

json group_json(const GroupPtr& G) {
  json gens = json::array();
  for (Elem g : G->generators()) gens.push_back(G->perm(g).cycles());
  return json{{"order", G->order()}, {"degree", G->degree()}, {"generators", gens}};
}

json table_json(const TablePtr& T) {
  const GroupPtr& G = T->group();
  json sizes = json::array(), reps = json::array(), rows = json::array();
  for (const auto& cls : G->conjugacy_classes()) {
    sizes.push_back(cls.size());
    reps.push_back(G->perm(cls.rep).cycles());
  }
  for (int i = 0; i < T->rows(); ++i) rows.push_back(values_json(T->irreducible(i)));
  return json{{"class_sizes", sizes}, {"class_reps", reps}, {"rows", rows}};
}

const CoverSpec& need_spec(const ParsedInput& input, const std::string& command) {
  if (!input.spec)
    fail("MalformedSpec", "the " + command + " command needs a base line in its input");
  return *input.spec;
}

struct SpecArgs {
  std::string path;
  bool json_in = false;
  bool json_out = false;
  long max_order = FiniteGroup::kOrderCap;
};

void add_spec_args(CLI::App* sub, SpecArgs& args) {
  sub->add_option("file", args.path, "input file, or - for stdin")->required();
  sub->add_flag("--json-in", args.json_in, "read the input as a JSON document");
  sub->add_flag("--json", args.json_out, "emit a JSON report");
  sub->add_option("--max-order", args.max_order, "cap on the enumerated group order");
}

void run_analyze(const SpecArgs& args, bool with_oracle) {
  const ParsedInput input = load_input(args.path, args.json_in, args.max_order);
  const CoverSpec& spec = need_spec(input, "analyze");
  validate(spec);
  const GroupPtr& G = spec.group;
  const TablePtr T = CharacterTable::of(G);
  const int m = spec.branch_count();

  std::optional<ClassFunction> punctured;
  if (m >= 1) punctured = punctured_homology_character(spec);

  std::optional<ClassFunction> closed;
  std::optional<ModuleExpr> module;
  if (spec.is_closed()) {
    closed = closed_homology_character(spec);
    module = closed_homology_module(spec);
  }

  std::vector<std::string> oracle_lines;
  bool oracle_ok = true;
  if (with_oracle) {
    CellComplex punctured_complex = build_punctured_cover(spec);
    if (punctured) {
      const bool ok = h1_character(punctured_complex) == *punctured;
      oracle_ok = oracle_ok && ok;
      oracle_lines.push_back(std::string("punctured: ") + (ok ? "OK" : "MISMATCH"));
    }
    if (spec.is_closed()) {
      const bool ok = h1_character(fill_cover(std::move(punctured_complex))) == *closed;
      oracle_ok = oracle_ok && ok;
      oracle_lines.push_back(std::string("closed: ") + (ok ? "OK" : "MISMATCH"));
    }
  }

  if (args.json_out) {
    json j{{"command", "analyze"}};
    j["group"] = group_json(G);
    j["base"] = spec.is_closed() ? json{{"kind", "closed"}, {"genus", spec.base_genus}}
                                 : json{{"kind", "disk"}};
    json branches = json::array();
    for (const BranchFiber& b : branch_fibers(spec))
      branches.push_back(json{{"index", b.index},
                              {"ramification_order", b.ramification_order},
                              {"fiber_size", b.fiber.size()}});
    j["branch_points"] = std::move(branches);
    if (spec.is_closed()) {
      j["cover_genus"] = cover_genus(spec);
      j["closed_h1_dim"] = closed_h1_dim(spec);
    }
    if (m >= 1) j["punctured_rank"] = punctured_rank(spec);
    if (closed) j["closed_character"] = values_json(*closed);
    if (module) j["module"] = module_json(*module);
    if (punctured) j["punctured_character"] = values_json(*punctured);
    j["character_table"] = table_json(T);
    if (with_oracle) {
      json checks = json::array();
      for (const std::string& line : oracle_lines) checks.push_back(line);
      j["oracle"] = std::move(checks);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: order " << G->order() << ", degree " << G->degree() << ", "
              << G->class_count() << " classes\n";
    std::cout << render_cover_spec(spec);
    std::cout << "branch points:\n";
    for (const BranchFiber& b : branch_fibers(spec))
      std::cout << "  l" << b.index << ": ramification order " << b.ramification_order
                << ", fiber size " << b.fiber.size() << "\n";
    if (spec.is_closed()) {
      std::cout << "cover genus: " << cover_genus(spec) << "\n";
      std::cout << "closed H1 dim: " << closed_h1_dim(spec) << "\n";
    }
    if (m >= 1) std::cout << "punctured rank: " << punctured_rank(spec) << "\n";
    if (closed) std::cout << "closed H1 character: " << render_class_function(*closed) << "\n";
    if (module) std::cout << "closed H1 module: " << module->str() << "\n";
    if (punctured)
      std::cout << "punctured H1 character: " << render_class_function(*punctured) << "\n";
    std::cout << "character table:\n" << render_character_table(T);
    for (const std::string& line : oracle_lines) std::cout << "oracle " << line << "\n";
  }
  if (!oracle_ok)
    fail_guard("InternalCheckFailed", "cell complex oracle disagrees with the character formula");
}

void run_hodge(const SpecArgs& args, const std::string& orientation_name) {
  const ParsedInput input = load_input(args.path, args.json_in, args.max_order);
  const CoverSpec& spec = need_spec(input, "hodge");
  validate(spec);
  const Orientation orientation =
      orientation_name == "neg" ? Orientation::Negative : Orientation::Positive;
  const HodgeCharacterPair pair = hodge_split(spec, orientation);
  const TablePtr T = CharacterTable::of(spec.group);
  const ModuleExpr m01 = decompose(T, pair.chi01);
  const ModuleExpr m10 = decompose(T, pair.chi10);
  const bool real = pair.chi10 == pair.chi01;

  if (args.json_out) {
    json j{{"command", "hodge"},
           {"orientation", orientation == Orientation::Positive ? "positive" : "negative"},
           {"cover_genus", cover_genus(spec)},
           {"chi10", values_json(pair.chi10)},
           {"chi01", values_json(pair.chi01)},
           {"chi10_module", module_json(m10)},
           {"chi01_module", module_json(m01)},
           {"real", real}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "orientation: " << (orientation == Orientation::Positive ? "positive" : "negative")
              << "\n";
    std::cout << "cover genus: " << cover_genus(spec) << "\n";
    std::cout << "chi10: " << render_class_function(pair.chi10) << "\n";
    std::cout << "chi01: " << render_class_function(pair.chi01) << "\n";
    std::cout << "chi10 module: " << m10.str() << "\n";
    std::cout << "chi01 module: " << m01.str() << "\n";
    std::cout << "real: " << (real ? "yes" : "no") << "\n";
  }
}

void run_oracle_check(const SpecArgs& args) {
  const ParsedInput input = load_input(args.path, args.json_in, args.max_order);
  const CoverSpec& spec = need_spec(input, "oracle-check");
  validate(spec);

  struct Check {
    std::string name;
    ClassFunction formula;
    ClassFunction oracle;
  };
  std::vector<Check> checks;
  CellComplex punctured_complex = build_punctured_cover(spec);
  if (spec.branch_count() >= 1)
    checks.push_back(
        {"punctured", punctured_homology_character(spec), h1_character(punctured_complex)});
  if (spec.is_closed())
    checks.push_back({"closed", closed_homology_character(spec),
                      h1_character(fill_cover(std::move(punctured_complex)))});

  bool all_ok = true;
  if (args.json_out) {
    json arr = json::array();
    for (const Check& c : checks) {
      const bool ok = c.formula == c.oracle;
      all_ok = all_ok && ok;
      arr.push_back(json{{"name", c.name},
                         {"formula", values_json(c.formula)},
                         {"oracle", values_json(c.oracle)},
                         {"match", ok}});
    }
    std::cout << json{{"command", "oracle-check"}, {"checks", std::move(arr)}}.dump(2) << "\n";
  } else {
    for (const Check& c : checks) {
      const bool ok = c.formula == c.oracle;
      all_ok = all_ok && ok;
      std::cout << c.name << ": formula " << render_class_function(c.formula) << ", oracle "
                << render_class_function(c.oracle) << " -> " << (ok ? "OK" : "MISMATCH") << "\n";
    }
  }
  if (!all_ok)
    fail_guard("InternalCheckFailed", "cell complex oracle disagrees with the character formula");
}

void run_topological(const SpecArgs& args) {
  const ParsedInput input = load_input(args.path, args.json_in, args.max_order);
  if (!input.stabilizer)
    fail("MalformedSpec", "the topological command needs a stabilizer line in its input");
  const GroupPtr& G = input.group;
  const Subgroup H = subgroup_closure(G, *input.stabilizer);
  const ClassFunction chi = permutation_character(coset_action(G, H));
  const TopologicalResult result = is_topological_perm_rep(G, chi);

  if (args.json_out) {
    json j{{"command", "topological"},
           {"stabilizer_order", H.order()},
           {"character", values_json(chi)},
           {"topological", result.topological}};
    if (result.witness) {
      json gens = json::array();
      for (Elem g : result.witness->generators) gens.push_back(render_element(G, g));
      j["witness"] = json{{"order", result.witness->order()}, {"generators", std::move(gens)}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "stabilizer: order " << H.order() << (H.is_cyclic ? ", cyclic" : ", not cyclic")
              << "\n";
    std::cout << "permutation character: " << render_class_function(chi) << "\n";
    std::cout << "topological: " << (result.topological ? "yes" : "no") << "\n";
    if (result.witness) {
      std::cout << "witness stabilizer: order " << result.witness->order() << ", generated by";
      if (result.witness->generators.empty()) std::cout << " ()";
      for (Elem g : result.witness->generators) std::cout << " " << render_element(G, g);
      std::cout << "\n";
    }
  }
}

std::vector<Rat> parse_coeffs(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      Rat q(tok);
      q.canonicalize();
      out.push_back(std::move(q));
    } catch (const std::exception&) {
      fail("ParseError", "bad rational coefficient '" + tok + "'");
    }
  }
  if (out.empty()) fail("ParseError", "empty coefficient list");
  return out;
}

std::string curve_string(const HyperellipticCyclicCover& cover) {
  std::string rhs;
  for (std::size_t i = 0; i < cover.coefficients.size(); ++i) {
    const Rat& a = cover.coefficients[i];
    if (a == 0) continue;
    Rat coeff = a;
    if (rhs.empty()) {
      if (coeff < 0) {
        rhs += "-";
        coeff = -coeff;
      }
    } else {
      rhs += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    const std::string xpow = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (xpow.empty()) {
      rhs += rat_str(coeff);
    } else if (coeff == 1) {
      rhs += xpow;
    } else {
      rhs += rat_str(coeff) + "*" + xpow;
    }
  }
  return "y^2 = " + (rhs.empty() ? "0" : rhs);
}

void run_hyperelliptic(int genus, long degree, const std::string& coeffs_text, bool json_out) {
  std::vector<Rat> coeffs;
  if (!coeffs_text.empty()) coeffs = parse_coeffs(coeffs_text);
  const HyperellipticCyclicCover cover = make_hyperelliptic_cover(genus, degree, std::move(coeffs));
  const TablePtr T = CharacterTable::of(cover.galois_group());
  const auto basis = differential_basis(cover);
  const ClassFunction h0K = h0K_character(cover);
  const ModuleExpr h0K_module = decompose(T, h0K);
  const KminusBData kb = h0KminusB_character(cover);
  const ModuleExpr kb_module = decompose(T, kb.character);
  const ObstructionReport obstruction = hyperelliptic_obstruction(cover.galois_group());

  if (json_out) {
    json basis_arr = json::array();
    for (const auto& b : basis)
      basis_arr.push_back(
          json{{"exponent", b.exponent}, {"symbol", b.symbol}, {"chi", b.character_value.str()}});
    json j{{"command", "hyperelliptic"},
           {"curve", curve_string(cover)},
           {"base_genus", cover.base_genus},
           {"cyclic_degree", cover.cyclic_degree},
           {"basis", std::move(basis_arr)},
           {"h0K", json{{"character", values_json(h0K)}, {"module", module_json(h0K_module)}}},
           {"h0KminusB", json{{"dimension", kb.dimension},
                              {"degree", kb.degree},
                              {"character", values_json(kb.character)},
                              {"module", module_json(kb_module)}}},
           {"obstruction", json{{"verdict", verdict_name(obstruction.verdict)},
                                {"reason", obstruction.reason}}}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "curve: " << curve_string(cover) << " (genus " << cover.base_genus << ")\n";
    std::cout << "cyclic degree: " << cover.cyclic_degree << "\n";
    std::cout << "differential basis:\n";
    for (const auto& b : basis)
      std::cout << "  " << b.symbol << "  [chi = " << b.character_value.str() << "]\n";
    std::cout << "H0(K) character: " << render_class_function(h0K) << "\n";
    std::cout << "H0(K) module: " << h0K_module.str() << "\n";
    std::cout << "H0(K-B): dim " << kb.dimension << ", degree " << kb.degree << "\n";
    std::cout << "H0(K-B) character: " << render_class_function(kb.character) << "\n";
    std::cout << "H0(K-B) module: " << kb_module.str() << "\n";
    std::cout << "obstruction: " << verdict_name(obstruction.verdict) << " (" << obstruction.reason
              << ")\n";
  }
}

void run_obstruction(const std::string& generators, bool json_out, long max_order) {
  const ParsedInput input = parse_input_text("group: " + generators, max_order);
  const ObstructionReport report = hyperelliptic_obstruction(input.group);
  if (json_out) {
    json j{{"command", "obstruction"},
           {"group", group_json(input.group)},
           {"verdict", verdict_name(report.verdict)},
           {"reason", report.reason}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: order " << input.group->order() << "\n";
    std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
    std::cout << "reason: " << report.reason << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-module structure of the homology of finite Galois covers"};
  app.require_subcommand(1);

  SpecArgs analyze_args;
  bool with_oracle = false;
  auto* analyze = app.add_subcommand("analyze", "homology characters and module of a cover");
  add_spec_args(analyze, analyze_args);
  analyze->add_flag("--oracle", with_oracle, "cross-check against the cell complex");
  analyze->callback([&] { run_analyze(analyze_args, with_oracle); });

  SpecArgs hodge_args;
  std::string orientation = "pos";
  auto* hodge = app.add_subcommand("hodge", "holomorphic and antiholomorphic split");
  add_spec_args(hodge, hodge_args);
  hodge->add_option("--orientation", orientation, "local rotation convention")
      ->check(CLI::IsMember({"pos", "neg"}));
  hodge->callback([&] { run_hodge(hodge_args, orientation); });

  SpecArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle-check", "compare formulas with the cell complex");
  add_spec_args(oracle, oracle_args);
  oracle->callback([&] { run_oracle_check(oracle_args); });

  SpecArgs topo_args;
  auto* topo = app.add_subcommand("topological", "is the coset character topological");
  add_spec_args(topo, topo_args);
  topo->callback([&] { run_topological(topo_args); });

  int he_genus = 2;
  long he_degree = 2;
  std::string he_coeffs;
  bool he_json = false;
  auto* hyper = app.add_subcommand("hyperelliptic", "cyclic covers of a hyperelliptic curve");
  hyper->add_option("-g,--genus", he_genus, "genus of the base curve")->required();
  hyper->add_option("-m,--degree", he_degree, "degree of the cyclic cover")->required();
  hyper->add_option("--coeffs", he_coeffs, "comma separated a_0..a_{2g+2}");
  hyper->add_flag("--json", he_json, "emit a JSON report");
  hyper->callback([&] { run_hyperelliptic(he_genus, he_degree, he_coeffs, he_json); });

  std::string ob_generators;
  bool ob_json = false;
  long ob_max_order = FiniteGroup::kOrderCap;
  auto* obstruction = app.add_subcommand("obstruction", "can the group act on a hyperelliptic curve");
  obstruction->add_option("--group", ob_generators, "semicolon separated cycle generators")
      ->required();
  obstruction->add_flag("--json", ob_json, "emit a JSON report");
  obstruction->add_option("--max-order", ob_max_order, "cap on the enumerated group order");
  obstruction->callback([&] { run_obstruction(ob_generators, ob_json, ob_max_order); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_guard() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

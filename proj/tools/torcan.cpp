// torcan — exact computations on torus-bundle classes: GL(n, Z) orbit
// decision, cylinder witness matrices, dual-graph calculus, and the
// registered claim suite.
//
// Exit codes: 0 = positive verdict (Equivalent / verified / isomorphic /
// claims ran without error), 1 = certified negative verdict (Distinct /
// not isomorphic), 2 = error or UNDECIDED.

#include <torcan/torcan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using torcan::AutAction;
using torcan::BundleClass;
using torcan::FinAbGroup;
using torcan::GroupElement;
using torcan::Integer;
using torcan::IntMatrix;
using torcan::Json;
using torcan::UnimodularMatrix;

// ---------------------------------------------------------------------------
// Parsing

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Integer parse_integer(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty integer token");
  try {
    return Integer(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + tok + "'");
  }
}

// A finite abelian group given as Z<m1>xZ<m2>x...; normalized internally
// to invariant factors, with the coordinate change kept so that user
// coordinates (one residue per Z<mi>) can be mapped into the normal form.
struct GroupSpec {
  std::string text;             // as given
  std::vector<Integer> moduli;  // user-facing coordinate moduli
  FinAbGroup group;             // invariant-factor normal form
  IntMatrix to_normal;          // user coords -> Z^k, then keep last rank()

  GroupElement element(const std::vector<Integer>& coords) const {
    if (coords.size() != moduli.size())
      throw std::invalid_argument("expected " +
                                  std::to_string(moduli.size()) +
                                  " coordinates, got " +
                                  std::to_string(coords.size()));
    const std::size_t k = moduli.size();
    const std::size_t rank = group.rank();
    std::vector<Integer> mapped(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < k; ++j)
        mapped[i] += to_normal(k - rank + i, j) * coords[j];
    return GroupElement(group, std::move(mapped));
  }
};

GroupSpec parse_group(const std::string& text) {
  GroupSpec spec;
  spec.text = text;
  for (const std::string& part : split(text, 'x')) {
    if (part.size() < 2 || part[0] != 'Z')
      throw std::invalid_argument("bad group spec '" + text +
                                  "' (expected Z<d> or Z<a>xZ<b>x...)");
    Integer m = parse_integer(part.substr(1));
    if (m < 1)
      throw std::invalid_argument("bad modulus in group spec '" + text + "'");
    spec.moduli.push_back(std::move(m));
  }
  // diag(m) = U S V, so Z^k / diag(m) Z^k = Z^k / S Z^k via x -> U^-1 x.
  const std::size_t k = spec.moduli.size();
  torcan::SmithDecomposition d =
      torcan::smith_normal_form(IntMatrix::diagonal(spec.moduli));
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < k; ++i)
    if (d.s(i, i) > 1) factors.push_back(d.s(i, i));
  spec.group = FinAbGroup::from_invariant_factors(factors);
  spec.to_normal = d.u.inverse().matrix();
  return spec;
}

// Classes: components separated by commas, coordinates within a component
// (for product groups) separated by colons, e.g. "21,15" or "1:0,0:1".
BundleClass parse_class(const GroupSpec& spec, const std::string& text) {
  std::vector<GroupElement> comps;
  for (const std::string& comp : split(text, ',')) {
    std::vector<Integer> coords;
    for (const std::string& tok : split(comp, ':'))
      coords.push_back(parse_integer(tok));
    comps.push_back(spec.element(coords));
  }
  return BundleClass(spec.group, std::move(comps));
}

// Automorphism generator: rank x rank matrix, rows separated by ';',
// entries by ',', e.g. "0,1;1,0".
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  for (const std::string& row : split(text, ';')) {
    rows.push_back({});
    for (const std::string& tok : split(row, ','))
      rows.back().push_back(parse_integer(tok));
  }
  return IntMatrix::from_rows(rows);
}

// ---------------------------------------------------------------------------
// Output

struct Output {
  bool json = false;
  Json doc;

  void set(const std::string& key, const Json& value) {
    doc[key] = value;
    if (!json) {
      if (value.is_string())
        std::cout << key << ": " << value.get<std::string>() << "\n";
      else
        std::cout << key << ": " << value.dump() << "\n";
    }
  }

  void finish() {
    if (json) std::cout << doc.dump(2) << "\n";
  }
};

Output make_output(bool json, const std::string& command, Json inputs) {
  Output out;
  out.json = json;
  out.doc = Json{{"command", command},
                 {"inputs", std::move(inputs)},
                 {"versions", Json{{"torcan", torcan::kVersion}}}};
  return out;
}

std::string class_text(const BundleClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (i) s += ",";
    s += c.component(i).to_string();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subcommands

struct OrbitArgs {
  std::string group, class1, class2;
  std::optional<std::size_t> n;
  std::vector<std::string> aut;
  std::uint64_t budget = torcan::kDefaultStateBudget;
  bool json = false;
};

int cmd_orbit(const OrbitArgs& a) {
  GroupSpec spec = parse_group(a.group);
  BundleClass c1 = parse_class(spec, a.class1);
  BundleClass c2 = parse_class(spec, a.class2);
  if (a.n && (c1.n() != *a.n || c2.n() != *a.n))
    throw std::invalid_argument("classes do not have --n components");
  std::vector<IntMatrix> gens;
  for (const std::string& g : a.aut) gens.push_back(parse_matrix(g));
  AutAction aut(spec.group, gens);

  Output out = make_output(a.json, "orbit",
                           Json{{"group", spec.group.to_string()},
                                {"class1", class_text(c1)},
                                {"class2", class_text(c2)},
                                {"aut_generators", a.aut},
                                {"budget", a.budget}});
  try {
    torcan::OrbitVerdict v = torcan::orbit_decide(c1, c2, aut, a.budget);
    out.set("verdict", v.equivalent() ? "Equivalent" : "Distinct");
    Json cert;
    cert["states_explored"] = v.states_explored;
    if (v.equivalent()) {
      cert["witness"] = torcan::json_matrix(v.witness->matrix());
      Json word = Json::array();
      for (std::size_t w : v.witness_aut_word) word.push_back(w);
      cert["aut_word"] = word;
      cert["verified"] = true;  // orbit_decide re-verifies before returning
    } else {
      cert["orbit_size"] = v.orbit_size;
    }
    out.set("certificate", cert);
    out.finish();
    return v.equivalent() ? 0 : 1;
  } catch (const torcan::BudgetExceeded& e) {
    out.set("verdict", "UNDECIDED");
    out.set("certificate", Json{{"note", "budget exhausted"},
                                {"budget", e.budget()},
                                {"states_explored", e.explored()}});
    out.finish();
    return 2;
  }
}

struct WitnessArgs {
  std::string group, class1, class2;
  bool json = false;
};

int cmd_witness(const WitnessArgs& a) {
  GroupSpec spec = parse_group(a.group);
  BundleClass c1 = parse_class(spec, a.class1);
  BundleClass c2 = parse_class(spec, a.class2);
  Output out = make_output(a.json, "witness",
                           Json{{"group", spec.group.to_string()},
                                {"class1", class_text(c1)},
                                {"class2", class_text(c2)}});
  torcan::CylinderWitnesses w = torcan::cylinder_witnesses(c1, c2);
  BundleClass joint = torcan::joint_class(c1, c2);
  out.set("verdict", "verified");
  out.set("A", torcan::json_matrix(w.a.matrix()));
  out.set("B", torcan::json_matrix(w.b.matrix()));
  out.set("multipliers", torcan::json_integers(w.multipliers));
  out.set("inverse_multipliers", torcan::json_integers(w.inverse_multipliers));
  out.set("joint_class", class_text(joint));
  out.set("transcript",
          "act(A, pad(class1)) == (class1,class2) == act(B, pad(class2))");
  out.finish();
  return 0;
}

torcan::WeightedDualGraph load_graph_arg(const std::string& name,
                                         const std::string& fixture_dir) {
  if (name.find('/') != std::string::npos ||
      (name.size() > 6 && name.substr(name.size() - 6) == ".graph")) {
    std::ifstream in(name);
    if (!in) throw std::runtime_error("cannot open graph file " + name);
    return torcan::parse_graph(in);
  }
  return torcan::load_fixture(
      name, fixture_dir.empty() ? torcan::default_fixture_dir() : fixture_dir);
}

Json graph_json(const torcan::WeightedDualGraph& g) {
  Json vertices = Json::array();
  for (const std::string& v : g.labels())
    vertices.push_back(Json::array({v, g.weight(v).str()}));
  Json edges = Json::array();
  for (const auto& [x, y, m] : g.edge_list())
    edges.push_back(Json::array({x, y, m.str()}));
  return Json{{"vertices", vertices}, {"edges", edges}};
}

void print_graph(Output& out, const torcan::WeightedDualGraph& g) {
  out.doc["graph"] = graph_json(g);
  if (!out.json) std::cout << torcan::to_string(g);
}

struct GraphArgs {
  std::string fixture_dir;
  bool json = false;
  // blowup
  std::string blowup_name, point, label;
  std::vector<std::string> edge;
  // contract
  std::string contract_name, contract_vertex;
  // form
  std::string form_name;
  std::vector<std::string> form_subset;
  // compare
  std::string compare_a, compare_b;
};

int cmd_graph_blowup(const GraphArgs& a) {
  torcan::WeightedDualGraph g = load_graph_arg(a.blowup_name, a.fixture_dir);
  if (a.point.empty() == a.edge.empty())
    throw std::invalid_argument("blowup: give exactly one of --point, --edge");
  torcan::WeightedDualGraph result =
      a.point.empty() ? torcan::blow_up_edge(g, a.edge[0], a.edge[1], a.label)
                      : torcan::blow_up_point(g, a.point, a.label);
  Output out = make_output(a.json, "graph blowup",
                           Json{{"graph", a.blowup_name},
                                {"point", a.point},
                                {"edge", a.edge}});
  print_graph(out, result);
  out.finish();
  return 0;
}

int cmd_graph_contract(const GraphArgs& a) {
  torcan::WeightedDualGraph g = load_graph_arg(a.contract_name, a.fixture_dir);
  torcan::WeightedDualGraph result = torcan::contract(g, a.contract_vertex);
  Output out = make_output(a.json, "graph contract",
                           Json{{"graph", a.contract_name},
                                {"vertex", a.contract_vertex}});
  print_graph(out, result);
  out.finish();
  return 0;
}

int cmd_graph_form(const GraphArgs& a) {
  torcan::WeightedDualGraph g = load_graph_arg(a.form_name, a.fixture_dir);
  std::vector<std::string> subset =
      a.form_subset.empty() ? g.labels() : a.form_subset;
  torcan::IntersectionForm f = torcan::intersection_matrix(g, subset);
  torcan::FormInvariants inv = torcan::form_invariants(f);
  Output out = make_output(a.json, "graph form",
                           Json{{"graph", a.form_name}, {"subset", subset}});
  out.set("basis", Json(f.basis_labels));
  out.set("gram", torcan::json_matrix(f.gram));
  out.set("components", f.size());
  out.set("gram_rank", inv.rank);
  out.set("determinant", inv.determinant.str());
  out.set("smith_invariants", torcan::json_integers(inv.smith_invariants));
  out.finish();
  return 0;
}

int cmd_graph_compare(const GraphArgs& a) {
  torcan::WeightedDualGraph g1 = load_graph_arg(a.compare_a, a.fixture_dir);
  torcan::WeightedDualGraph g2 = load_graph_arg(a.compare_b, a.fixture_dir);
  torcan::IntersectionForm f1 = torcan::intersection_matrix(g1);
  torcan::IntersectionForm f2 = torcan::intersection_matrix(g2);
  torcan::FormComparison cmp = torcan::compare_forms(f1, f2);
  Output out = make_output(
      a.json, "graph compare",
      Json{{"graph1", a.compare_a}, {"graph2", a.compare_b}});
  if (cmp.isomorphic) {
    out.set("verdict", "isomorphic");
    Json bij = Json::array();
    for (std::size_t i = 0; i < cmp.bijection->size(); ++i)
      bij.push_back(Json::array(
          {f1.basis_labels[i], f2.basis_labels[(*cmp.bijection)[i]]}));
    out.set("certificate", Json{{"reason", cmp.reason}, {"bijection", bij}});
  } else {
    out.set("verdict", "not isomorphic: " + cmp.reason);
    out.set("certificate", Json{{"reason", cmp.reason}});
  }
  out.finish();
  return cmp.isomorphic ? 0 : 1;
}

struct CheckArgs {
  std::string only;
  std::optional<std::uint64_t> budget;
  std::string fixture_dir;
  bool json = false;
};

int cmd_check(const CheckArgs& a) {
  torcan::ClaimOptions opt;
  opt.budget = a.budget;
  if (!a.fixture_dir.empty()) opt.fixture_dir = a.fixture_dir;
  std::vector<torcan::ClaimReport> reports;
  if (a.only.empty()) {
    reports = torcan::run_all_claims(opt);
  } else {
    reports.push_back(torcan::run_claim(a.only, opt));
  }

  Json inputs{{"only", a.only}};
  if (a.budget) inputs["budget"] = *a.budget;
  Output out = make_output(a.json, "check", std::move(inputs));
  Json rj = Json::array();
  std::size_t errored = 0, refuted = 0, undecided = 0;
  for (const torcan::ClaimReport& r : reports) {
    rj.push_back(Json{{"claim_id", r.claim_id},
                      {"statement", r.statement},
                      {"status", r.status_string()},
                      {"certificate", r.certificate},
                      {"error", r.error}});
    if (!r.error.empty()) ++errored;
    if (r.status == torcan::ClaimReport::Status::refuted) ++refuted;
    if (r.status == torcan::ClaimReport::Status::undecided) ++undecided;
  }
  out.doc["reports"] = rj;
  if (!out.json) {
    for (const torcan::ClaimReport& r : reports) {
      std::string line = r.claim_id;
      line.resize(28, ' ');
      line += r.status_string();
      if (!r.error.empty()) line += "  ERROR: " + r.error;
      std::cout << line << "\n";
      if (r.status == torcan::ClaimReport::Status::refuted) {
        std::cout << "  !! refuted with certificate:\n";
        std::istringstream cert(r.certificate.dump(2));
        for (std::string l; std::getline(cert, l);)
          std::cout << "  " << l << "\n";
      }
    }
    std::cout << "claims: " << reports.size() << ", refuted: " << refuted
              << ", undecided: " << undecided << ", errored: " << errored
              << "\n";
  }
  out.doc["summary"] = Json{{"claims", reports.size()},
                            {"refuted", refuted},
                            {"undecided", undecided},
                            {"errored", errored}};
  out.finish();
  return errored == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact torus-bundle class computations"};
  app.require_subcommand(1);

  OrbitArgs orbit_args;
  CLI::App* orbit = app.add_subcommand(
      "orbit", "decide whether two classes lie in one GL(n,Z) orbit");
  orbit->add_option("--group", orbit_args.group, "group, e.g. Z35 or Z2xZ4")
      ->required();
  orbit->add_option("--n", orbit_args.n, "number of components (checked)");
  orbit->add_option("--aut", orbit_args.aut,
                    "automorphism generator, rows ';'-separated, e.g. 0,1;1,0");
  orbit->add_option("--budget", orbit_args.budget, "state budget for the search");
  orbit->add_flag("--json", orbit_args.json, "emit one JSON document");
  orbit->add_option("class1", orbit_args.class1, "first class, e.g. 21,15")
      ->required();
  orbit->add_option("class2", orbit_args.class2, "second class")->required();

  WitnessArgs witness_args;
  CLI::App* witness = app.add_subcommand(
      "witness", "construct and verify cylinder witness matrices");
  witness->add_option("--group", witness_args.group, "group spec")->required();
  witness->add_flag("--json", witness_args.json, "emit one JSON document");
  witness->add_option("class1", witness_args.class1, "first class")->required();
  witness->add_option("class2", witness_args.class2, "second class")
      ->required();

  GraphArgs graph_args;
  CLI::App* graph =
      app.add_subcommand("graph", "dual-graph calculus and form comparison");
  graph->require_subcommand(1);
  graph->add_option("--fixture-dir", graph_args.fixture_dir,
                    "directory with .graph fixtures");

  CLI::App* blowup = graph->add_subcommand("blowup", "blow up a point or edge");
  blowup->add_option("graph", graph_args.blowup_name, "fixture name or file")
      ->required();
  blowup->add_option("--point", graph_args.point, "vertex to blow up at");
  blowup->add_option("--edge", graph_args.edge, "edge endpoints")
      ->expected(2);
  blowup->add_option("--label", graph_args.label, "label for the new vertex");
  blowup->add_flag("--json", graph_args.json, "emit one JSON document");

  CLI::App* contract_cmd =
      graph->add_subcommand("contract", "contract a (-1) vertex");
  contract_cmd
      ->add_option("graph", graph_args.contract_name, "fixture name or file")
      ->required();
  contract_cmd
      ->add_option("vertex", graph_args.contract_vertex, "vertex to contract")
      ->required();
  contract_cmd->add_flag("--json", graph_args.json, "emit one JSON document");

  CLI::App* form =
      graph->add_subcommand("form", "Gram matrix and invariants");
  form->add_option("graph", graph_args.form_name, "fixture name or file")
      ->required();
  form->add_option("--subset", graph_args.form_subset,
                   "restrict to these vertices, in order");
  form->add_flag("--json", graph_args.json, "emit one JSON document");

  CLI::App* compare =
      graph->add_subcommand("compare", "exact intersection-form comparison");
  compare->add_option("graph1", graph_args.compare_a, "fixture name or file")
      ->required();
  compare->add_option("graph2", graph_args.compare_b, "fixture name or file")
      ->required();
  compare->add_flag("--json", graph_args.json, "emit one JSON document");

  CheckArgs check_args;
  CLI::App* check =
      app.add_subcommand("check", "run the registered claim suite");
  check->alias("paper-check");
  check->add_option("--only", check_args.only, "run a single claim by id");
  check->add_option("--budget", check_args.budget,
                    "override every orbit-search budget");
  check->add_option("--fixture-dir", check_args.fixture_dir,
                    "directory with .graph fixtures");
  check->add_flag("--json", check_args.json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbit) return cmd_orbit(orbit_args);
    if (*witness) return cmd_witness(witness_args);
    if (*graph) {
      if (*blowup) return cmd_graph_blowup(graph_args);
      if (*contract_cmd) return cmd_graph_contract(graph_args);
      if (*form) return cmd_graph_form(graph_args);
      if (*compare) return cmd_graph_compare(graph_args);
    }
    if (*check) return cmd_check(check_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

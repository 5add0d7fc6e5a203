#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmg/bmg.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum Exit { kYes = 0, kNo = 1, kInputError = 2 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

json witness_json(const bmg::ColoredDigraph& g, const bmg::ForbiddenWitness& w) {
  json ids = json::array();
  for (bmg::Vertex v : w.vertices) ids.push_back(g.id(v));
  return {{"kind", std::string(bmg::to_string(w.kind))}, {"vertices", ids}};
}

std::string witness_line(const bmg::ColoredDigraph& g, const bmg::ForbiddenWitness& w) {
  std::string line(bmg::to_string(w.kind));
  for (bmg::Vertex v : w.vertices) line += " " + g.id(v);
  return line;
}

// Shared state of one invocation.
struct Run {
  bool as_json = false;
  std::string command;
  std::string input = "-";
  Clock::time_point start = Clock::now();

  void report(const json& result, const json& witnesses, const json& cost) const {
    if (!as_json) return;
    const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    json line = {{"command", command}, {"input", input},         {"result", result},
                 {"witnesses", witnesses}, {"cost", cost}, {"runtime_ms", ms}};
    std::cout << line.dump() << "\n";
  }
};

// recognize ---------------------------------------------------------------

struct RecognizeOpts {
  std::string method = "mtt";
  std::string tree_out;
};

int cmd_recognize(const Run& run, const RecognizeOpts& o) {
  const auto g = bmg::parse_graph(read_input(run.input));
  bool yes = false;
  json result;
  std::string text;
  if (o.method == "mtt") {
    const auto r = bmg::recognize_bmg(g);
    yes = r.is_bmg;
    result = {{"is_bmg", yes}};
    if (yes) {
      const std::string newick = bmg::serialize_tree(*r.explaining_tree);
      result["tree"] = newick;
      if (!o.tree_out.empty()) write_output(o.tree_out, newick + "\n");
      text = "bmg\n";
    } else {
      result["reason"] = std::string(bmg::to_string(*r.failure_reason));
      text = "not_bmg " + std::string(bmg::to_string(*r.failure_reason)) + "\n";
    }
  } else if (o.method == "aho") {
    yes = bmg::recognize_bmg_via_aho(g);
    result = {{"is_bmg", yes}};
    text = yes ? "bmg\n" : "not_bmg\n";
  } else if (o.method == "forbidden") {
    yes = bmg::is_2bmg_via_forbidden(g);
    result = {{"is_bmg", yes}};
    text = yes ? "bmg\n" : "not_bmg\n";
  } else {
    const auto ax = bmg::check_neighborhood_axioms(g);
    const bool sf = bmg::is_sf_colored(g);
    yes = sf && ax.all();
    result = {{"is_bmg", yes}, {"sf_colored", sf}, {"N0", ax.n0}, {"N1", ax.n1}, {"N2", ax.n2}, {"N3", ax.n3}};
    text = std::string(yes ? "bmg" : "not_bmg") + " sf=" + (sf ? "1" : "0") + " N0=" + (ax.n0 ? "1" : "0") +
           " N1=" + (ax.n1 ? "1" : "0") + " N2=" + (ax.n2 ? "1" : "0") + " N3=" + (ax.n3 ? "1" : "0") + "\n";
  }
  if (!run.as_json) std::cout << text;
  run.report(result, json::array(), nullptr);
  return yes ? kYes : kNo;
}

// edit / delete / complete ------------------------------------------------

struct EditOpts {
  bool exact = false;
  std::string export_lp;
  std::string formulation;
  std::optional<std::size_t> budget;
  std::string graph_out;
};

int cmd_edit(const Run& run, bmg::EditMode mode, const EditOpts& o) {
  const auto g = bmg::parse_graph(read_input(run.input));
  if (!o.export_lp.empty()) {
    bmg::Formulation f = g.num_colors() == 2 ? bmg::Formulation::TwoColor : bmg::Formulation::General;
    if (!o.formulation.empty()) f = *bmg::parse_formulation(o.formulation);
    write_output(o.export_lp, bmg::export_lp(bmg::build_model(g, mode, f)));
    // Exporting alone does not solve.
    if (!o.exact) {
      run.report({{"exported", o.export_lp}, {"formulation", std::string(bmg::to_string(f))}}, json::array(),
                 nullptr);
      return kYes;
    }
  }
  bmg::SolveResult sol;
  try {
    sol = bmg::solve_exact(g, mode, o.budget);
  } catch (const bmg::Error& e) {
    if (e.code() != bmg::ErrorCode::Infeasible && e.code() != bmg::ErrorCode::BudgetExceeded) throw;
    const std::string why(bmg::to_string(e.code()));
    if (!run.as_json) std::cout << "no_solution " << why << "\n";
    run.report({{"feasible", false}, {"reason", why}}, json::array(), nullptr);
    return kNo;
  }
  json pairs = json::array();
  std::string text = "cost " + std::to_string(sol.optimal_cost) + "\n";
  for (const bmg::Arc& a : sol.edit_set.pairs) {
    const bool add = !g.has_arc(a.from, a.to);
    text += std::string(add ? "+ " : "- ") + g.id(a.from) + " " + g.id(a.to) + "\n";
    pairs.push_back({{"op", add ? "add" : "delete"}, {"from", g.id(a.from)}, {"to", g.id(a.to)}});
  }
  if (!o.graph_out.empty()) write_output(o.graph_out, bmg::serialize_graph(bmg::apply_edit(g, sol.edit_set)));
  if (!run.as_json) std::cout << text;
  run.report({{"feasible", true}, {"mode", std::string(bmg::to_string(mode))}, {"edits", pairs}}, json::array(),
             sol.optimal_cost);
  return kYes;
}

// binary-explainable / scan -----------------------------------------------

int cmd_binary(const Run& run) {
  const auto g = bmg::parse_graph(read_input(run.input));
  const bool yes = bmg::is_binary_explainable(g);
  json witnesses = json::array();
  if (!yes) {
    for (const auto& w : bmg::scan_hourglasses(g)) witnesses.push_back(witness_json(g, w));
  }
  if (!run.as_json) std::cout << (yes ? "binary_explainable\n" : "not_binary_explainable\n");
  run.report({{"binary_explainable", yes}}, witnesses, nullptr);
  return yes ? kYes : kNo;
}

int cmd_scan(const Run& run, const std::string& kind_list) {
  const auto g = bmg::parse_graph(read_input(run.input));
  std::vector<bmg::WitnessKind> forbidden;
  bool hourglass = false;
  std::istringstream names(kind_list);
  for (std::string name; std::getline(names, name, ',');) {
    const auto k = bmg::parse_witness_kind(name);
    if (!k || *k == bmg::WitnessKind::Sink) throw CLI::ValidationError("--kinds", "unknown kind '" + name + "'");
    if (*k == bmg::WitnessKind::Hourglass) {
      hourglass = true;
    } else {
      forbidden.push_back(*k);
    }
  }
  std::vector<bmg::ForbiddenWitness> found;
  if (!forbidden.empty()) found = bmg::scan_forbidden_subgraphs(g, forbidden);
  if (hourglass) {
    auto h = bmg::scan_hourglasses(g);
    found.insert(found.end(), h.begin(), h.end());
  }
  json witnesses = json::array();
  for (const auto& w : found) {
    witnesses.push_back(witness_json(g, w));
    if (!run.as_json) std::cout << witness_line(g, w) << "\n";
  }
  run.report({{"count", found.size()}}, witnesses, nullptr);
  return found.empty() ? kYes : kNo;
}

// generate ----------------------------------------------------------------

struct GenerateOpts {
  bool tree = false;
  bool bmg = false;
  std::string perturb;
  std::size_t n = 10;
  std::size_t colors = 2;
  std::uint64_t seed = 0;
  double multifurcation = 0.2;
  std::size_t flips = 1;
  std::string mode = "editing";
  std::string out;
};

int cmd_generate(Run& run, const GenerateOpts& o) {
  std::string doc;
  json result;
  if (!o.perturb.empty()) {
    run.input = o.perturb;
    const auto g = bmg::parse_graph(read_input(o.perturb));
    const auto mode = bmg::parse_edit_mode(o.mode);
    const auto p = bmg::perturb(g, o.flips, o.seed, *mode);
    doc = bmg::serialize_graph(p.graph);
    json flipped = json::array();
    for (const bmg::Arc& a : p.edits.pairs) flipped.push_back({g.id(a.from), g.id(a.to)});
    result = {{"kind", "perturbed"}, {"flips", flipped}};
  } else {
    const auto tree = bmg::random_colored_tree(o.n, o.colors, o.seed, o.multifurcation);
    if (o.tree) {
      doc = bmg::serialize_tree(tree) + "\n";
      result = {{"kind", "tree"}};
    } else {
      const auto g = bmg::bmg_from_tree(tree);
      doc = bmg::serialize_graph(g);
      result = {{"kind", "bmg"}, {"vertices", g.size()}, {"arcs", g.num_arcs()}};
    }
  }
  write_output(o.out, doc);
  if (!o.out.empty()) result["out"] = o.out;
  run.report(result, json::array(), nullptr);
  return kYes;
}

// gadget ------------------------------------------------------------------

struct GadgetOpts {
  std::string x3c;
  std::string cgc;
  std::vector<std::size_t> scale;
  std::string out;
};

int cmd_gadget(Run& run, const GadgetOpts& o) {
  bmg::GadgetOutput gadget;
  if (!o.x3c.empty()) {
    run.input = o.x3c;
    const auto inst = bmg::parse_x3c(read_input(o.x3c));
    std::optional<bmg::GadgetScale> scale;
    if (!o.scale.empty()) scale = bmg::GadgetScale{o.scale[0], o.scale[1]};
    gadget = bmg::x3c_gadget(inst, scale);
  } else {
    run.input = o.cgc;
    gadget = bmg::cgc_gadget(bmg::parse_bipartite(read_input(o.cgc)));
  }
  write_output(o.out, bmg::serialize_graph(gadget.graph));
  json result = {{"vertices", gadget.graph.size()}, {"arcs", gadget.graph.num_arcs()}, {"faithful", gadget.faithful}};
  if (gadget.r) result["r"] = *gadget.r;
  if (gadget.q_const) result["q"] = *gadget.q_const;
  if (gadget.k) result["k"] = *gadget.k;
  if (!o.out.empty()) {
    result["out"] = o.out;
    if (!run.as_json && gadget.k) std::cout << "k " << *gadget.k << "\n";
  }
  run.report(result, json::array(), gadget.k ? json(*gadget.k) : json(nullptr));
  return kYes;
}

// catalog -----------------------------------------------------------------

int cmd_catalog(const Run& run, const std::string& out_dir) {
  const auto cat = bmg::enumerate_forbidden_classes();
  json result = {{"f1_graphs", cat.f1_graphs},
                 {"f2_graphs", cat.f2_graphs},
                 {"f3_graphs", cat.f3_graphs},
                 {"f1_iso_classes", cat.f1_iso_classes},
                 {"f2_iso_classes", cat.f2_iso_classes},
                 {"f1_f2_iso_classes", cat.f1_f2_iso_classes},
                 {"overlap", cat.overlap},
                 {"f3_iso_classes", cat.f3_iso_classes},
                 {"f3_without_f1_f2", cat.f3_without_f1_f2},
                 {"nonredundant_total", cat.nonredundant_total}};
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::string listing;
  for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
    const std::string doc = bmg::serialize_graph(cat.representatives[i]);
    if (out_dir.empty()) {
      listing += "# class " + std::to_string(i + 1) + "\n" + doc;
    } else {
      char name[32];
      std::snprintf(name, sizeof name, "class_%02zu.bmg", i + 1);
      write_output((std::filesystem::path(out_dir) / name).string(), doc);
    }
  }
  if (!run.as_json) {
    for (const auto& [key, value] : result.items()) std::cout << key << " " << value.dump() << "\n";
    std::cout << listing;
  }
  run.report(result, json::array(), nullptr);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best match graph toolkit"};
  app.require_subcommand(1);
  Run run;
  app.add_flag("--json", run.as_json, "Emit a JSON-lines report on stdout");

  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a BMG");
  RecognizeOpts rec;
  recognize->add_option("input", run.input, "Graph file, '-' for stdin");
  recognize->add_option("--method", rec.method)->check(CLI::IsMember({"mtt", "aho", "forbidden", "axioms"}));
  recognize->add_option("--tree-out", rec.tree_out, "Write the explaining tree here");

  EditOpts edit;
  std::vector<std::pair<CLI::App*, bmg::EditMode>> edit_cmds;
  for (auto [name, mode] : {std::pair{"edit", bmg::EditMode::Editing}, std::pair{"delete", bmg::EditMode::Deletion},
                            std::pair{"complete", bmg::EditMode::Completion}}) {
    auto* sub = app.add_subcommand(name, "Minimum arc modification to a BMG");
    sub->add_option("input", run.input, "Graph file, '-' for stdin");
    sub->add_flag("--exact", edit.exact, "Solve exactly (default unless only exporting)");
    sub->add_option("--export-lp", edit.export_lp, "Write the 0-1 program as CPLEX-LP");
    sub->add_option("--formulation", edit.formulation)->check(CLI::IsMember({"two_color", "general"}));
    sub->add_option("--budget", edit.budget, "Give up above this many edits");
    sub->add_option("--graph-out", edit.graph_out, "Write the edited graph here");
    edit_cmds.emplace_back(sub, mode);
  }

  auto* binary = app.add_subcommand("binary-explainable", "Is the BMG explained by a binary tree");
  binary->add_option("input", run.input, "Graph file, '-' for stdin");

  auto* scan = app.add_subcommand("scan", "List forbidden induced subgraphs");
  std::string kinds = "f1,f2,f3";
  scan->add_option("input", run.input, "Graph file, '-' for stdin");
  scan->add_option("--kinds", kinds, "Comma separated: f1,f2,f3,hourglass");

  auto* generate = app.add_subcommand("generate", "Random trees, BMGs and perturbations");
  GenerateOpts gen;
  auto* g_tree = generate->add_flag("--tree", gen.tree, "Random colored tree");
  auto* g_bmg = generate->add_flag("--bmg", gen.bmg, "BMG of a random colored tree");
  auto* g_perturb = generate->add_option("--perturb", gen.perturb, "Flip pairs of this graph");
  g_tree->excludes(g_bmg)->excludes(g_perturb);
  g_bmg->excludes(g_perturb);
  generate->add_option("-n", gen.n, "Number of leaves");
  generate->add_option("-l,--colors", gen.colors, "Number of colors");
  generate->add_option("--seed", gen.seed)->required();
  generate->add_option("--multifurcation", gen.multifurcation)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--flips", gen.flips);
  generate->add_option("--mode", gen.mode)->check(CLI::IsMember({"editing", "deletion", "completion"}));
  generate->add_option("--out", gen.out);

  auto* gadget = app.add_subcommand("gadget", "Reduction gadgets");
  GadgetOpts gad;
  auto* x3c = gadget->add_option("--x3c", gad.x3c, "X3C instance file");
  auto* cgc = gadget->add_option("--cgc", gad.cgc, "Bipartite graph file");
  x3c->excludes(cgc);
  gadget->add_option("--scale", gad.scale, "X_HALF,Y_HALF bi-clique half sizes")
      ->delimiter(',')
      ->expected(2)
      ->needs(x3c);
  gadget->add_option("--out", gad.out);

  auto* catalog = app.add_subcommand("catalog", "Forbidden subgraph classes");
  std::string out_dir;
  catalog->add_option("--out-dir", out_dir, "Write one graph file per class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    for (auto* sub : app.get_subcommands()) run.command = sub->get_name();
    if (recognize->parsed()) return cmd_recognize(run, rec);
    for (auto [sub, mode] : edit_cmds) {
      if (sub->parsed()) return cmd_edit(run, mode, edit);
    }
    if (binary->parsed()) return cmd_binary(run);
    if (scan->parsed()) return cmd_scan(run, kinds);
    if (generate->parsed()) {
      if (!gen.tree && !gen.bmg && gen.perturb.empty()) {
        throw CLI::ValidationError("generate", "one of --tree, --bmg, --perturb is required");
      }
      if (run.as_json && gen.out.empty()) throw CLI::ValidationError("--json", "needs --out for documents");
      return cmd_generate(run, gen);
    }
    if (gadget->parsed()) {
      if (gad.x3c.empty() && gad.cgc.empty()) throw CLI::ValidationError("gadget", "--x3c or --cgc is required");
      if (run.as_json && gad.out.empty()) throw CLI::ValidationError("--json", "needs --out for documents");
      return cmd_gadget(run, gad);
    }
    if (catalog->parsed()) return cmd_catalog(run, out_dir);
  } catch (const bmg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

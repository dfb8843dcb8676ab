// Batch front-end: generate objects, run the experiments, verify
// invariants on supplied files. Exit code 0 means every check passed.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "coarse/experiments.hpp"
#include "coarse/json_io.hpp"

namespace fs = std::filesystem;
using namespace coarse;

namespace {

std::string join_sizes(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(sizes[i]);
  }
  return s;
}

int cmd_generate(const std::string& kind, const std::string& out_dir, int cyclic,
                 const std::vector<int>& sizes, int size, int graph_degree, std::uint64_t seed,
                 int empty_n, int cycle_n, int complete_n) {
  fs::create_directories(out_dir);
  if (kind == "schreier") {
    if (cyclic <= 0) throw CLI::ValidationError("generate schreier requires --cyclic N (N >= 1)");
    const ActionGenerators action = cyclic_action(cyclic);
    const UlfGraph g = schreier_graph(action);
    const std::string base = out_dir + "/schreier_c" + std::to_string(cyclic);
    save_json(base + "_action.json", json(action));
    save_json(base + ".json", json(g));
    std::cout << "schreier Z/" << cyclic << ": " << g.size() << " vertices, " << g.edges().size()
              << " edges -> " << base << ".json\n";
    return 0;
  }
  if (kind == "box-cycles" || kind == "box-complete") {
    if (sizes.empty()) throw CLI::ValidationError("generate " + kind + " requires --sizes a,b,...");
    std::vector<UlfGraph> comps;
    for (int m : sizes) comps.push_back(kind == "box-cycles" ? cycle_graph(m) : complete_graph(m));
    const BoxSpace box(std::move(comps));
    const std::string path = out_dir + "/" + (kind == "box-cycles" ? "box_cycles_" : "box_complete_") +
                             join_sizes(sizes) + ".json";
    save_json(path, json(box));
    std::cout << kind << " [" << join_sizes(sizes) << "]: " << box.total_size() << " vertices";
    if (box.component_count() >= 2) {
      const SparseFamily fam(box.ambient_metric(), box.component_blocks());
      std::cout << ", dist(V1,V2) = " << fam.distance(0, 1).str();
    }
    std::cout << " -> " << path << "\n";
    return 0;
  }
  if (kind == "random-regular") {
    if (size <= 0) throw CLI::ValidationError("generate random-regular requires --size N");
    Rng rng(seed);
    const UlfGraph g = random_connected_regular_graph(rng, size, graph_degree);
    const std::string path = out_dir + "/random_regular_" + std::to_string(size) + "_" +
                             std::to_string(graph_degree) + "_s" + std::to_string(seed) + ".json";
    save_json(path, json(g));
    std::cout << "random " << graph_degree << "-regular on " << size << " vertices (seed " << seed
              << ") -> " << path << "\n";
    return 0;
  }
  if (kind == "entourage") {
    Entourage e;
    std::string tag;
    if (empty_n > 0) {
      e = Entourage(empty_n, {});
      tag = "empty_" + std::to_string(empty_n);
    } else if (cycle_n > 0) {
      e = adjacency_relation(cycle_graph(cycle_n));
      tag = "cycle_" + std::to_string(cycle_n);
    } else if (complete_n > 0) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < complete_n; ++i)
        for (int j = 0; j < complete_n; ++j) pairs.push_back({i, j});
      e = Entourage(complete_n, std::move(pairs));
      tag = "complete_" + std::to_string(complete_n);
    } else {
      throw CLI::ValidationError("generate entourage requires --empty N, --cycle N, or --complete N");
    }
    const std::string path = out_dir + "/entourage_" + tag + ".json";
    save_json(path, json(e));
    std::cout << "entourage " << tag << ": " << e.size() << " pairs -> " << path << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown generate kind: " + kind);
}

int cmd_experiment(const std::string& name, const std::string& out_dir, std::uint64_t seed,
                   std::vector<int> sizes, int radius, int scale, int poly_degree,
                   int graph_degree, bool complete, const std::string& format) {
  fs::create_directories(out_dir);
  if (name == "amenable-box") {
    if (sizes.empty()) sizes = default_cycle_sizes();
    const AmenableBoxResult r = run_amenable_box(sizes, radius, scale);
    write_amenable_box_files(r, out_dir, format);
    std::cout << "amenable-box: " << sizes.size() << " cycles, S = 1.." << radius << ", eps(S=" << radius
              << ") = " << fmt_g(r.sweep.back().eps) << (r.pass() ? " [pass]" : " [FAIL]") << "\n";
    for (const auto& f : r.failures) std::cerr << "  failure: " << f << "\n";
    return r.pass() ? 0 : 1;
  }
  if (name == "expander-box") {
    if (sizes.empty()) sizes = {8, 16, 32, 64};
    const ExpanderBoxResult r =
        run_expander_box(sizes, graph_degree, complete, poly_degree, radius, scale, seed);
    write_expander_box_files(r, out_dir, format);
    std::cout << "expander-box: " << sizes.size() << " components, quality floor "
              << fmt_g(r.quality_floor) << ", max ghost bound "
              << fmt_g(*std::max_element(r.bounds.begin(), r.bounds.end()))
              << (r.pass() ? " [pass]" : " [FAIL]") << "\n";
    for (const auto& f : r.failures) std::cerr << "  failure: " << f << "\n";
    return r.pass() ? 0 : 1;
  }
  if (name == "lemma-suite") {
    const LemmaSuiteResult r = run_lemma_suite(seed);
    write_lemma_suite_files(r, out_dir);
    for (const auto& c : r.checks)
      std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << c.check << " (residual " << fmt_g(c.residual)
                << ")\n";
    std::cout << "lemma-suite (seed " << seed << "): " << (r.all_pass ? "all pass" : "FAILURES") << "\n";
    return r.all_pass ? 0 : 1;
  }
  throw CLI::ValidationError("unknown experiment: " + name);
}

int report_and_exit(const std::vector<CheckReport>& reports) {
  json j = json::array();
  bool all = true;
  for (const auto& r : reports) {
    j.push_back(r);
    all = all && r.pass;
  }
  std::cout << j.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_verify(const std::string& check, const std::string& graph_file,
               const std::string& entourage_file, const std::string& action_file,
               const std::string& op_file, const std::string& eta_file,
               const std::string& eta_prime_file, double epsilon, double L, int radius,
               std::uint64_t seed) {
  if (check == "smoothing") {
    const UlfGraph g = load_json(graph_file).get<UlfGraph>();
    const ProbMeasure eta = load_json(eta_file).get<ProbMeasure>();
    SmoothingReport rep;
    if (!eta_prime_file.empty()) {
      const ProbMeasure eta_prime = load_json(eta_prime_file).get<ProbMeasure>();
      rep = verify_smoothing(eta, eta_prime, epsilon, L, g);
    } else {
      rep = smooth(eta, epsilon, g).report;
    }
    std::vector<CheckReport> out;
    out.push_back({"smoothing-l1", rep.l1_dist - rep.eps, rep.eps - rep.l1_dist, rep.l1_pass, seed});
    out.push_back({"smoothing-edge-ratio", rep.worst_edge_ratio - rep.L, rep.L - rep.worst_edge_ratio,
                   rep.ratio_pass, seed});
    out.push_back({"smoothing-tail", rep.worst_tail_margin, -rep.worst_tail_margin, rep.tail_pass, seed});
    return report_and_exit(out);
  }
  if (check == "coloring") {
    const Entourage s = load_json(entourage_file).get<Entourage>();
    const int d = check_ulf(s).row;
    const auto invs = edge_color_decompose(s);
    Entourage cover(s.ground_size(), {});
    bool inv_ok = true, inside = true;
    for (const auto& inv : invs) {
      inv_ok = inv_ok && is_involution(inv);
      inside = inside && inv.graph().subset_of(s);
      cover = cover.union_with(inv.graph());
    }
    const bool cover_ok = cover == s;
    const double count_margin = static_cast<double>(static_cast<int>(invs.size()) - (2 * d - 1));
    std::vector<CheckReport> out;
    out.push_back({"coloring-count", count_margin, -count_margin, count_margin <= 0, seed});
    out.push_back({"coloring-cover", cover_ok && inside ? 0.0 : 1.0, 0.0, cover_ok && inside, seed});
    out.push_back({"coloring-involutions", inv_ok ? 0.0 : 1.0, 0.0, inv_ok, seed});
    return report_and_exit(out);
  }
  if (check == "involution") {
    const ActionGenerators a = load_json(action_file).get<ActionGenerators>();
    std::vector<CheckReport> out;
    for (const auto& g : a.generators()) {
      const bool ok = is_involution(g.map);
      if (!ok) std::cerr << "generator '" << g.name << "' is not an involution\n";
      out.push_back({"involution:" + g.name, ok ? 0.0 : 1.0, 0.0, ok, seed});
    }
    return report_and_exit(out);
  }
  if (check == "compression-identity") {
    const UlfGraph g = load_json(graph_file).get<UlfGraph>();
    const PropOperator a = load_json(op_file).get<PropOperator>();
    const PropOperator eta_op = load_json(eta_file).get<PropOperator>();
    const CompressionReport rep =
        compression_state_identity(HSMatrix(eta_op.mat), a, radius, g.metric());
    std::vector<CheckReport> out;
    out.push_back({"compression-identity", rep.residual, -rep.residual, rep.residual <= 1e-12, seed});
    return report_and_exit(out);
  }
  throw CLI::ValidationError("unknown verify check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-scale coarse geometry toolkit"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  std::uint64_t seed = 7;
  std::vector<int> sizes;
  int radius = 10, scale = 1, poly_degree = 1, graph_degree = 3;
  std::string format = "json";

  // generate
  auto* gen = app.add_subcommand("generate", "emit graphs, box spaces, actions, entourages as JSON");
  std::string gen_kind;
  int cyclic = 0, size = 0, empty_n = 0, cycle_n = 0, complete_n = 0;
  gen->add_option("kind", gen_kind, "schreier|box-cycles|box-complete|random-regular|entourage")
      ->required();
  gen->add_option("--cyclic", cyclic, "cyclic group order for schreier");
  gen->add_option("--sizes", sizes, "component sizes")->delimiter(',');
  gen->add_option("--size", size, "vertex count for random-regular");
  gen->add_option("--graph-degree", graph_degree, "regular degree for random-regular");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--empty", empty_n, "empty entourage on N points");
  gen->add_option("--cycle", cycle_n, "cycle adjacency entourage on N points");
  gen->add_option("--complete", complete_n, "full relation on N points");
  gen->add_option("--out", out_dir, "output directory");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a named experiment and emit report files");
  std::string exp_name;
  bool complete_components = false;
  exp->add_option("name", exp_name, "amenable-box|expander-box|lemma-suite")->required();
  exp->add_option("--seed", seed, "RNG seed");
  exp->add_option("--out", out_dir, "output directory");
  exp->add_option("--sizes", sizes, "component sizes")->delimiter(',');
  exp->add_option("--radius", radius, "max witness support radius S in the sweep");
  exp->add_option("--scale", scale, "comparison scale R");
  exp->add_option("--degree", poly_degree, "polynomial degree k for the ghost approximation");
  exp->add_option("--graph-degree", graph_degree, "regular degree of random components");
  exp->add_flag("--complete", complete_components, "use complete graphs instead of random regular");
  exp->add_option("--format", format, "summary format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* ver = app.add_subcommand("verify", "run a named verifier on supplied JSON files");
  std::string ver_check, graph_file, entourage_file, action_file, op_file, eta_file, eta_prime_file;
  double epsilon = 0.5, L = 1.0;
  int ver_radius = 0;
  ver->add_option("check", ver_check, "smoothing|coloring|involution|compression-identity")
      ->required();
  ver->add_option("--graph", graph_file, "graph JSON");
  ver->add_option("--entourage", entourage_file, "entourage JSON");
  ver->add_option("--action", action_file, "action JSON");
  ver->add_option("--op", op_file, "operator JSON (triplets)");
  ver->add_option("--eta", eta_file, "measure JSON, or operator JSON for compression-identity");
  ver->add_option("--eta-prime", eta_prime_file, "smoothed measure JSON");
  ver->add_option("--epsilon", epsilon, "smoothing quality eps");
  ver->add_option("--L", L, "smoothing decay constant");
  ver->add_option("--radius", ver_radius, "compression radius S");
  ver->add_option("--seed", seed, "seed recorded in reports");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(gen_kind, out_dir, cyclic, sizes, size, graph_degree, seed, empty_n,
                          cycle_n, complete_n);
    if (exp->parsed())
      return cmd_experiment(exp_name, out_dir, seed, sizes, radius, scale, poly_degree,
                            graph_degree, complete_components, format);
    if (ver->parsed())
      return cmd_verify(ver_check, graph_file, entourage_file, action_file, op_file, eta_file,
                        eta_prime_file, epsilon, L, ver_radius, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

// Command-line front end: exact Steiner distances, k-eccentricities,
// radius/diameter sweeps, family generators, claim verification, and the
// randomized ratio scan. All output is machine-parseable key=value pairs.
//
// Exit codes: 0 success/Verified, 1 usage or input error, 2 refuted claim or
// scan violation, 3 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "steiner/steiner.hpp"

using namespace steiner;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
  int threads = 0;
  std::string budget;  // empty = default / STEINER_BUDGET
};

SweepOptions sweep_options(const GlobalOpts& g) {
  SweepOptions opts;
  opts.threads = g.threads;
  if (!g.budget.empty()) {
    const Rational r = Rational::parse(g.budget);
    if (r.den() != 1 || r.num() <= 0) throw Error("--budget: expected a positive integer");
    opts.budget = static_cast<std::uint64_t>(r.num());
  }
  return opts;
}

TerminalSet parse_terminals(const Graph& g, const std::string& spec) {
  std::vector<Vertex> vs;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw Error("-S: empty vertex token");
    vs.push_back(g.resolve(token));
  }
  if (vs.empty()) throw Error("-S: no vertices given");
  return TerminalSet(vs);
}

std::string edge_list_str(const Graph& g, const std::vector<Edge>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += g.display(edges[i].first) + "-" + g.display(edges[i].second);
  }
  return out;
}

std::string vertex_list_str(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += g.display(vs[i]);
  }
  return out;
}

int status_exit(Status s) {
  switch (s) {
    case Status::Verified:
    case Status::PremiseNotMet:
      return kExitOk;
    case Status::Refuted:
      return kExitRefuted;
    default:
      return kExitBudget;
  }
}

Tier parse_tier(const std::string& t) {
  if (t == "witness") return Tier::Witness;
  if (t == "exhaustive") return Tier::Exhaustive;
  throw Error("--tier: expected 'witness' or 'exhaustive', got '" + t + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Steiner distance, k-radius/diameter, and bound verification"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--threads", global.threads, "worker threads for sweeps (0 = all)");
  app.add_option("--budget", global.budget, "sweep budget in DP units (overrides STEINER_BUDGET)");

  int exit_code = kExitOk;

  // dist -g FILE -S a,b,c
  std::string dist_file, dist_terms;
  auto* dist = app.add_subcommand("dist", "Steiner distance of a terminal set with witness tree");
  dist->add_option("-g,--graph", dist_file, "graph file")->required();
  dist->add_option("-S,--terminals", dist_terms, "comma-separated labels or indices")->required();
  dist->callback([&] {
    const Graph g = load_graph_file(dist_file);
    const TerminalSet s = parse_terminals(g, dist_terms);
    const SteinerResult r = steiner_distance(g, s, sweep_options(global));
    std::cout << "cost=" << r.cost.str() << "\n";
    std::cout << "tree_vertices=" << vertex_list_str(g, r.tree_vertices) << "\n";
    std::cout << "tree_edges=" << edge_list_str(g, r.tree_edges) << "\n";
  });

  // ecc -g FILE -k K -v V
  std::string ecc_file, ecc_vertex;
  int ecc_k = 0;
  auto* ecc = app.add_subcommand("ecc", "Steiner k-eccentricity of one vertex");
  ecc->add_option("-g,--graph", ecc_file, "graph file")->required();
  ecc->add_option("-k", ecc_k, "subset size")->required();
  ecc->add_option("-v,--vertex", ecc_vertex, "vertex label or index")->required();
  ecc->callback([&] {
    const Graph g = load_graph_file(ecc_file);
    const Vertex v = g.resolve(ecc_vertex);
    const auto rep = k_eccentricity(g, v, ecc_k, sweep_options(global));
    std::cout << "vertex=" << g.display(v) << " k=" << ecc_k << " ecc=" << rep.value.str()
              << " witness=" << rep.witness.str(g) << "\n";
  });

  // radius|diameter|center -g FILE -k K [--witness]
  struct SweepCmd {
    std::string file;
    int k = 0;
    bool witness = false;
  };
  SweepCmd rad_args, diam_args, cen_args;
  const auto add_sweep = [&](const char* name, const char* help, SweepCmd& args) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("-g,--graph", args.file, "graph file")->required();
    cmd->add_option("-k", args.k, "subset size")->required();
    cmd->add_flag("--witness", args.witness, "also print witness sets");
    return cmd;
  };
  add_sweep("radius", "Steiner k-radius", rad_args)->callback([&] {
    const Graph g = load_graph_file(rad_args.file);
    const auto rep = steiner_radius_diameter(g, rad_args.k, sweep_options(global));
    std::cout << "k=" << rep.k << " srad=" << rep.srad.str();
    if (rad_args.witness) std::cout << " center=" << vertex_list_str(g, rep.center_vertices);
    std::cout << "\n";
  });
  add_sweep("diameter", "Steiner k-diameter", diam_args)->callback([&] {
    const Graph g = load_graph_file(diam_args.file);
    const auto rep = steiner_radius_diameter(g, diam_args.k, sweep_options(global));
    std::cout << "k=" << rep.k << " sdiam=" << rep.sdiam.str();
    if (diam_args.witness) std::cout << " diametral=" << rep.diametral_set.str(g);
    std::cout << "\n";
  });
  add_sweep("center", "Steiner k-center", cen_args)->callback([&] {
    const Graph g = load_graph_file(cen_args.file);
    const auto rep = steiner_radius_diameter(g, cen_args.k, sweep_options(global));
    std::cout << "k=" << rep.k << " center=" << vertex_list_str(g, rep.center_vertices)
              << " srad=" << rep.srad.str() << "\n";
  });

  // gen gk -k K -o FILE | gen h -o FILE
  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->require_subcommand(1);
  int gen_k = 5;
  std::string gen_out_gk, gen_out_h;
  auto* gen_gk = gen->add_subcommand("gk", "the tight-ratio family");
  gen_gk->add_option("-k", gen_k, "family parameter (k >= 5)")->required();
  gen_gk->add_option("-o,--output", gen_out_gk, "output file")->required();
  gen_gk->callback([&] {
    const FamilyHandle fam = build_Gk(gen_k);
    save_graph_file(gen_out_gk, fam.graph);
    std::cout << "written=" << gen_out_gk << " n=" << fam.graph.vertex_count()
              << " m=" << fam.graph.edge_count() << "\n";
  });
  auto* gen_h = gen->add_subcommand("h", "the 70-vertex counterexample graph");
  gen_h->add_option("-o,--output", gen_out_h, "output file")->required();
  gen_h->callback([&] {
    const FamilyHandle fam = build_H();
    save_graph_file(gen_out_h, fam.graph);
    std::cout << "written=" << gen_out_h << " n=" << fam.graph.vertex_count()
              << " m=" << fam.graph.edge_count() << "\n";
  });

  // verify gk|h|claim|bound|lemma
  auto* verify = app.add_subcommand("verify", "mechanical claim checks");
  verify->require_subcommand(1);
  const auto emit = [&](const VerificationReport& r) {
    std::cout << r.line() << "\n";
    exit_code = status_exit(r.status);
  };

  int vgk_k = 5;
  std::string vgk_tier = "witness";
  auto* vgk = verify->add_subcommand("gk", "tight family invariants");
  vgk->add_option("-k", vgk_k, "family parameter")->required();
  vgk->add_option("--tier", vgk_tier, "witness|exhaustive");
  vgk->callback([&] { emit(verify_Gk(vgk_k, parse_tier(vgk_tier), sweep_options(global))); });

  std::string vh_tier = "witness";
  auto* vh = verify->add_subcommand("h", "counterexample graph arithmetic");
  vh->add_option("--tier", vh_tier, "witness|exhaustive");
  vh->callback([&] { emit(verify_H(parse_tier(vh_tier), sweep_options(global))); });

  auto* vclaim = verify->add_subcommand("claim", "reproduce the violated inequality");
  vclaim->callback([&] { emit(verify_claim_violation(sweep_options(global))); });

  std::string vb_file;
  int vb_k = 2;
  bool vb_tree = false;
  auto* vbound = verify->add_subcommand("bound", "ratio bound on a given graph");
  vbound->add_option("-g,--graph", vb_file, "graph file")->required();
  vbound->add_option("-k", vb_k, "subset size")->required();
  vbound->add_flag("--tree", vb_tree, "check the tree bound k/(k-1) instead");
  vbound->callback([&] {
    const Graph g = load_graph_file(vb_file);
    emit(vb_tree ? check_tree_bound(g, vb_k, sweep_options(global))
                 : check_bound(g, vb_k, sweep_options(global)));
  });

  std::string vl_file, vl_p;
  int vl_k = 2;
  auto* vlemma = verify->add_subcommand("lemma", "distance lemma at a given p");
  vlemma->add_option("-g,--graph", vl_file, "graph file")->required();
  vlemma->add_option("-k", vl_k, "subset size")->required();
  vlemma->add_option("-p", vl_p, "rational p as NUM/DEN")->required();
  vlemma->callback([&] {
    const Graph g = load_graph_file(vl_file);
    emit(check_lemma(g, vl_k, Rational::parse(vl_p), sweep_options(global)));
  });

  // scan --ensemble tree|gnp -n N [-p NUM/DEN] -k K --trials T --seed S
  std::string scan_ensemble, scan_p = "1/2";
  int scan_n = 0, scan_k = 0, scan_trials = 0;
  std::uint64_t scan_seed = 0;
  bool scan_log = false;
  auto* scan = app.add_subcommand("scan", "seeded random search for extremal ratios");
  scan->add_option("--ensemble", scan_ensemble, "tree|gnp")->required();
  scan->add_option("-n", scan_n, "graph order")->required();
  scan->add_option("-p", scan_p, "edge probability NUM/DEN (gnp only)");
  scan->add_option("-k", scan_k, "subset size")->required();
  scan->add_option("--trials", scan_trials, "number of trials")->required();
  scan->add_option("--seed", scan_seed, "base seed");
  scan->add_flag("--log", scan_log, "print one line per trial");
  scan->callback([&] {
    EnsembleConfig cfg;
    if (scan_ensemble == "tree")
      cfg.kind = EnsembleConfig::Kind::RandomTree;
    else if (scan_ensemble == "gnp")
      cfg.kind = EnsembleConfig::Kind::RandomConnectedGnp;
    else
      throw Error("--ensemble: expected 'tree' or 'gnp', got '" + scan_ensemble + "'");
    cfg.n = scan_n;
    cfg.p = Rational::parse(scan_p);
    cfg.seed = scan_seed;
    const ScanResult r = ratio_scan(cfg, scan_k, scan_trials, sweep_options(global), scan_log);
    for (const auto& line : r.log) std::cout << line << "\n";
    for (const auto& line : r.violations) std::cout << "violation " << line << "\n";
    std::cout << r.line() << "\n";
    if (!r.violations.empty()) exit_code = kExitRefuted;
  });

  // bench: DP timing suite on the bundled instances
  auto* bench = app.add_subcommand("bench", "Steiner DP timing suite");
  bench->callback([&] {
    const auto timed = [](const std::string& name, auto&& fn) {
      const auto start = std::chrono::steady_clock::now();
      const std::int64_t value = fn();
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::cout << "bench=" << name << " value=" << value << " ms=" << ms << "\n";
    };
    const SweepOptions opts = sweep_options(global);
    timed("g5_dist_D", [&] {
      const FamilyHandle fam = build_Gk(5);
      std::vector<Vertex> d;
      for (int i = 1; i <= 5; ++i) d.push_back(fam.role("d" + std::to_string(i)));
      return steiner_distance(fam.graph, TerminalSet(d), opts).cost.value();
    });
    timed("g8_sweep", [&] {
      return steiner_radius_diameter(build_Gk(8).graph, 8, opts).sdiam.value();
    });
    timed("h_dist_D", [&] {
      const FamilyHandle fam = build_H();
      std::vector<Vertex> d;
      for (int j = 1; j <= 4; ++j) d.push_back(fam.role("v" + std::to_string(j)));
      return steiner_distance(fam.graph, TerminalSet(d), opts).cost.value();
    });
    timed("h_ecc_v0", [&] {
      const FamilyHandle fam = build_H();
      return k_eccentricity(fam.graph, fam.role("v0"), 4, opts).value.value();
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}

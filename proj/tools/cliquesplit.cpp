// Command-line front end: graph generators, reductions, the decomposition
// driver, single solves, QUBO export, capacity model, and batch benchmarks.
//
// Exit codes: 0 success, 1 usage or input error, 2 solver failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliquesplit/cliquesplit.hpp"

namespace cs = cliquesplit;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cs::Graph read_graph(const std::string& path) {
  if (path == "-") return cs::parse_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return cs::parse_dimacs(in);
}

/// Output sink: the named file, or standard output when empty / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string vertex_list(const std::vector<cs::Vertex>& labels) {
  std::string out;
  for (cs::Vertex v : labels) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum clique by decomposition into bounded-size subproblems"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Output file (default: standard output)");

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a graph in DIMACS format");
  gen->require_subcommand(1);
  gen->fallthrough();
  bool gen_complement = false;
  gen->add_flag("--complement", gen_complement, "Emit the complement graph");
  std::uint64_t seed = 0;

  std::size_t gnp_n = 45;
  double gnp_p = 0.5;
  auto* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gen_gnp->add_option("--n", gnp_n, "Vertices")->required();
  gen_gnp->add_option("--p", gnp_p, "Edge probability")->required();
  gen_gnp->add_option("--seed", seed, "Generator seed");

  cs::ChimeraSpec chimera;
  auto add_chimera_dims = [&](CLI::App* sub) {
    sub->add_option("--rows", chimera.rows, "Cell rows")->capture_default_str();
    sub->add_option("--cols", chimera.cols, "Cell columns")->capture_default_str();
    sub->add_option("--shore", chimera.shore, "Qubits per cell side")->capture_default_str();
  };
  auto* gen_chimera = gen->add_subcommand("chimera", "Chimera C(rows, cols, shore)");
  add_chimera_dims(gen_chimera);

  std::size_t contractions = 0;
  auto* gen_cm = gen->add_subcommand("cm", "Chimera with random edge contractions");
  add_chimera_dims(gen_cm);
  gen_cm->add_option("--contractions", contractions, "Number of contractions")->required();
  gen_cm->add_option("--seed", seed, "Contraction seed");

  unsigned bits = 4;
  unsigned distance = 2;
  auto* gen_hamming = gen->add_subcommand("hamming", "Binary words, edge iff Hamming distance >= d");
  gen_hamming->add_option("--bits", bits, "Word length")->required();
  gen_hamming->add_option("--distance", distance, "Minimum distance")->required();

  // reduce -------------------------------------------------------------------
  std::string input;
  auto* reduce = app.add_subcommand("reduce", "k-core or lower-bound reduction");
  reduce->add_option("input", input, "DIMACS file or -")->required();
  std::optional<std::size_t> k;
  std::optional<std::size_t> lower_bound;
  bool all_vertices = false;
  auto* k_opt = reduce->add_option("--k", k, "Extract the k-core");
  auto* lb_opt = reduce->add_option("--lower-bound", lower_bound, "Clique-size lower bound for edge pruning");
  k_opt->excludes(lb_opt);
  reduce->add_option("--seed", seed, "Seed for the pruning vertex");
  reduce->add_flag("--all-vertices", all_vertices, "Prune around every vertex");

  // split --------------------------------------------------------------------
  auto* split = app.add_subcommand("split", "Solve by decomposition; prints one CSV row");
  split->add_option("input", input, "DIMACS file or -")->required();
  cs::SplitConfig split_cfg;
  std::string solver = "exact";
  std::string parts = "auto";
  split->add_option("--vertex-limit", split_cfg.vertex_limit, "Largest subproblem handed to the solver")
      ->capture_default_str();
  split->add_option("--solver", solver, "Subproblem solver")
      ->check(CLI::IsMember(cs::solver_names()))
      ->capture_default_str();
  split->add_option("--seed", split_cfg.seed, "Run seed");
  split->add_option("--parts", parts, "CH-partition parts or 'auto'")->capture_default_str();
  split->add_option("--parallel", split_cfg.workers, "Solver worker threads")->capture_default_str();
  split->add_option("--lower-bound", split_cfg.lower_bound, "Known clique-size lower bound");

  // solve --------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Solve one graph directly");
  solve->add_option("input", input, "DIMACS file or -")->required();
  cs::SolverConfig solver_cfg;
  solve->add_option("--solver", solver, "Backend")->check(CLI::IsMember(cs::solver_names()))->capture_default_str();
  solve->add_option("--seed", solver_cfg.seed, "Seed");
  solve->add_option("--budget", solver_cfg.budget, "Node/iteration budget (0 = default)");
  solve->add_option("--alpha", solver_cfg.alpha, "Cooling factor")->capture_default_str();
  solve->add_option("--num-reads", solver_cfg.num_reads, "Sampler reads")->capture_default_str();

  // qubo ---------------------------------------------------------------------
  auto* qubo = app.add_subcommand("qubo", "Emit the maximum-clique QUBO of a graph");
  cs::PenaltyParams penalty;
  qubo->add_option("--from-graph", input, "DIMACS file or -")->required();
  qubo->add_option("--reward", penalty.reward, "Per-vertex reward A")->capture_default_str();
  qubo->add_option("--penalty", penalty.penalty, "Per-conflict penalty B")->capture_default_str();

  // capacity -----------------------------------------------------------------
  auto* capacity = app.add_subcommand("capacity", "Largest complete graph embeddable on a Chimera chip");
  std::size_t qubits = 1152;
  capacity->add_option("--qubits", qubits, "Qubit count")->required();

  // bench --------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration; prints CSV");
  std::string config_path;
  std::vector<std::string> overrides;
  std::string bench_seeds;
  bench->add_option("config", config_path, "key = value configuration file")->required();
  bench->add_option("--seed", bench_seeds, "Seed list, overrides the config (e.g. 1..10)");
  bench->add_option("--set", overrides, "Override a config key: key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Output out(out_path);
    std::ostream& os = out.stream();

    if (*gen) {
      cs::Graph g;
      if (*gen_gnp) g = cs::gnp_random(gnp_n, gnp_p, seed);
      if (*gen_chimera) g = cs::chimera_graph(chimera);
      if (*gen_cm) g = cs::contract_random_edges(cs::chimera_graph(chimera), contractions, seed).graph;
      if (*gen_hamming) g = cs::hamming_graph(bits, distance);
      if (gen_complement) g = cs::complement(g);
      cs::write_dimacs(g, os);
    } else if (*reduce) {
      const cs::Graph g = read_graph(input);
      cs::ReductionOutcome r;
      if (k) {
        r.graph = cs::k_core(g, *k);
        r.removed_vertices = g.num_vertices() - r.graph.num_vertices();
        r.removed_edges = g.num_edges() - r.graph.num_edges();
      } else if (lower_bound) {
        r = cs::reduce_graph(g, *lower_bound, seed,
                             all_vertices ? cs::EdgePruning::kAllVertices : cs::EdgePruning::kRandomVertex);
      } else {
        throw UsageError("reduce needs --k or --lower-bound");
      }
      std::cerr << "removed_vertices " << r.removed_vertices << "\nremoved_edges " << r.removed_edges << '\n';
      cs::write_dimacs(r.graph, os);
    } else if (*split) {
      const cs::Graph g = read_graph(input);
      split_cfg.parts = parts == "auto" ? 0 : std::stoul(parts);
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = cs::split_solve(g, split_cfg, cs::named_solver(solver));
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      os << "graph,n,m,vertex_limit,solver_calls,clique_size,wall_time_s\n"
         << input << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << split_cfg.vertex_limit << ','
         << r.stats.subproblems_solved << ',' << r.size() << ',' << cs::format_number(wall) << '\n';
    } else if (*solve) {
      const cs::Graph g = read_graph(input);
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = cs::solve_mc(g, solver, solver_cfg);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      os << "solver " << solver << "\nclique_size " << r.size() << "\nvertices " << vertex_list(r.vertices) << '\n';
      if (r.energy) os << "energy " << cs::format_number(*r.energy) << '\n';
      os << "wall_time_s " << cs::format_number(wall) << '\n';
    } else if (*qubo) {
      cs::write_qubo(cs::mc_to_qubo(read_graph(input), penalty), os);
    } else if (*capacity) {
      os << cs::clique_capacity(qubits) << '\n';
    } else if (*bench) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot open '" + config_path + "'");
      cs::BenchConfig cfg = cs::parse_bench_config(in);
      for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
        cs::set_option(cfg, cs::trim(std::string_view(kv).substr(0, eq)),
                       cs::trim(std::string_view(kv).substr(eq + 1)));
      }
      if (!bench_seeds.empty()) cs::set_option(cfg, "seeds", bench_seeds);
      cs::emit_csv(cs::run_experiment(cfg), os);
    }
  } catch (const cs::SolverFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cs::BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

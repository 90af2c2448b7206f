#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquesplit/chimera.hpp"
#include "cliquesplit/errors.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/partition.hpp"
#include "cliquesplit/solvers.hpp"
#include "cliquesplit/text.hpp"

namespace cliquesplit {

/// One experiment: a graph family crossed with vertex limits and seeds.
/// List-valued keys (n, p, avg_degree, vertex_limit) expand into one
/// configuration per combination.
struct BenchConfig {
  std::string experiment = "bench";
  std::string graph = "gnp";  // gnp | chimera | cm | hamming | dimacs
  std::vector<std::size_t> sizes{500};
  std::vector<double> probabilities{0.3};
  /// When non-empty, replaces probabilities with p = d / (n - 1).
  std::vector<double> average_degrees;
  /// Fixed generator seed; when unset each run seed also seeds the graph.
  std::optional<std::uint64_t> graph_seed;
  ChimeraSpec chimera;
  std::size_t contractions = 0;
  bool complement = false;
  unsigned word_length = 4;
  unsigned min_distance = 2;
  std::string path;

  std::string solver = "exact";
  std::vector<std::size_t> vertex_limits{45};
  std::vector<std::uint64_t> seeds{0};
  std::size_t repetitions = 1;
  /// Modeled seconds per subproblem solve (annealer time per call).
  double per_call_time_model_s = 0.15;
  std::size_t parts = 0;
  std::size_t workers = 1;
  SolverConfig solver_config;

  void validate() const {
    if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    if (!(per_call_time_model_s >= 0.0)) throw std::invalid_argument("per_call_time_model_s must be >= 0");
    if (seeds.empty()) throw std::invalid_argument("no seeds");
    if (vertex_limits.empty()) throw std::invalid_argument("no vertex limits");
    if (std::find(solver_names().begin(), solver_names().end(), solver) == solver_names().end()) {
      throw std::invalid_argument("unknown solver '" + solver + "'");
    }
  }
};

/// One split run, or (seed == nullopt) the median row of a configuration.
struct RunRecord {
  std::string experiment;
  std::string graph;
  double n = 0;
  double m = 0;
  std::string solver;
  std::size_t vertex_limit = 0;
  std::optional<std::uint64_t> seed;
  std::size_t repetition = 0;
  double clique_size = 0;
  double solver_calls = 0;
  double split_time_s = 0;      // wall clock, excludes solver calls
  double modeled_total_s = 0;   // split_time_s + per_call_time_model_s * solver_calls
};

namespace detail {

template <class T>
std::vector<T> parse_list(std::string_view value, std::string_view key) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = std::min(value.find(',', start), value.size());
    const std::string_view item = trim(value.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    if constexpr (std::is_floating_point_v<T>) {
      auto v = parse_number(item);
      if (!v) throw std::invalid_argument("bad number '" + std::string(item) + "' for " + std::string(key));
      out.push_back(*v);
    } else {
      // "a..b" expands to an inclusive integer range.
      if (auto dots = item.find(".."); dots != std::string_view::npos) {
        auto lo = parse_unsigned(trim(item.substr(0, dots)));
        auto hi = parse_unsigned(trim(item.substr(dots + 2)));
        if (!lo || !hi || *lo > *hi) throw std::invalid_argument("bad range '" + std::string(item) + "'");
        for (auto x = *lo; x <= *hi; ++x) out.push_back(static_cast<T>(x));
      } else {
        auto v = parse_unsigned(item);
        if (!v) throw std::invalid_argument("bad integer '" + std::string(item) + "' for " + std::string(key));
        out.push_back(static_cast<T>(*v));
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list for " + std::string(key));
  return out;
}

template <class T>
T parse_one(std::string_view value, std::string_view key) {
  auto v = parse_list<T>(value, key);
  if (v.size() != 1) throw std::invalid_argument(std::string(key) + " takes a single value");
  return v.front();
}

inline bool parse_bool(std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("bad boolean '" + std::string(value) + "'");
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t k = xs.size();
  return k % 2 ? xs[k / 2] : (xs[k / 2 - 1] + xs[k / 2]) / 2.0;
}

}  // namespace detail

/// Applies one `key = value` setting. Throws std::invalid_argument on an
/// unknown key or a malformed value.
inline void set_option(BenchConfig& cfg, std::string_view key, std::string_view value) {
  using detail::parse_list;
  using detail::parse_one;
  if (key == "experiment") cfg.experiment = value;
  else if (key == "graph") cfg.graph = value;
  else if (key == "n") cfg.sizes = parse_list<std::size_t>(value, key);
  else if (key == "p") cfg.probabilities = parse_list<double>(value, key);
  else if (key == "avg_degree") cfg.average_degrees = parse_list<double>(value, key);
  else if (key == "graph_seed") cfg.graph_seed = parse_one<std::uint64_t>(value, key);
  else if (key == "rows") cfg.chimera.rows = parse_one<std::size_t>(value, key);
  else if (key == "cols") cfg.chimera.cols = parse_one<std::size_t>(value, key);
  else if (key == "shore") cfg.chimera.shore = parse_one<std::size_t>(value, key);
  else if (key == "contractions") cfg.contractions = parse_one<std::size_t>(value, key);
  else if (key == "complement") cfg.complement = detail::parse_bool(value);
  else if (key == "word_length") cfg.word_length = parse_one<unsigned>(value, key);
  else if (key == "min_distance") cfg.min_distance = parse_one<unsigned>(value, key);
  else if (key == "path") cfg.path = value;
  else if (key == "solver") cfg.solver = value;
  else if (key == "vertex_limit") cfg.vertex_limits = parse_list<std::size_t>(value, key);
  else if (key == "seeds" || key == "seed") cfg.seeds = parse_list<std::uint64_t>(value, key);
  else if (key == "repetitions") cfg.repetitions = parse_one<std::size_t>(value, key);
  else if (key == "per_call_time_model_s") cfg.per_call_time_model_s = parse_one<double>(value, key);
  else if (key == "parts") cfg.parts = value == "auto" ? 0 : parse_one<std::size_t>(value, key);
  else if (key == "workers") cfg.workers = parse_one<std::size_t>(value, key);
  else if (key == "alpha") cfg.solver_config.alpha = parse_one<double>(value, key);
  else if (key == "budget") cfg.solver_config.budget = parse_one<std::uint64_t>(value, key);
  else if (key == "num_reads") cfg.solver_config.num_reads = parse_one<std::size_t>(value, key);
  else throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

/// Flat `key = value` lines; '#' starts a comment.
inline BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    try {
      set_option(cfg, trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return cfg;
}

inline BenchConfig parse_bench_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bench_config(in);
}

struct GeneratedGraph {
  Graph graph;
  std::string description;
};

/// Builds the graph for one configuration point. `p` is the already resolved
/// edge probability for gnp.
inline GeneratedGraph make_bench_graph(const BenchConfig& cfg, std::size_t n, double p, std::uint64_t seed) {
  std::ostringstream desc;
  GeneratedGraph out;
  if (cfg.graph == "gnp") {
    out.graph = gnp_random(n, p, seed);
    desc << "gnp n=" << n << " p=" << format_number(p) << " seed=" << seed;
  } else if (cfg.graph == "chimera" || cfg.graph == "cm") {
    out.graph = chimera_graph(cfg.chimera);
    desc << "chimera " << cfg.chimera.rows << 'x' << cfg.chimera.cols << 'x' << cfg.chimera.shore;
    if (cfg.graph == "cm") {
      out.graph = contract_random_edges(out.graph, cfg.contractions, seed).graph;
      desc << " contractions=" << cfg.contractions << " seed=" << seed;
    }
  } else if (cfg.graph == "hamming") {
    out.graph = hamming_graph(cfg.word_length, cfg.min_distance);
    desc << "hamming bits=" << cfg.word_length << " d>=" << cfg.min_distance;
  } else if (cfg.graph == "dimacs") {
    std::ifstream in(cfg.path);
    if (!in) throw std::runtime_error("cannot read graph file '" + cfg.path + "'");
    out.graph = parse_dimacs(in);
    desc << cfg.path;
  } else {
    throw std::invalid_argument("unknown graph source '" + cfg.graph + "'");
  }
  if (cfg.complement) {
    out.graph = complement(out.graph);
    desc << " complement";
  }
  out.description = desc.str();
  return out;
}

/// Runs every configuration x seed x repetition, appending a median row after
/// each configuration's runs.
inline std::vector<RunRecord> run_experiment(const BenchConfig& cfg) {
  cfg.validate();
  using clock = std::chrono::steady_clock;
  const bool by_degree = !cfg.average_degrees.empty();
  const bool sized = cfg.graph == "gnp";
  const std::vector<std::size_t> sizes = sized ? cfg.sizes : std::vector<std::size_t>{0};
  const std::vector<double> densities =
      !sized ? std::vector<double>{0.0} : by_degree ? cfg.average_degrees : cfg.probabilities;

  std::vector<RunRecord> records;
  for (std::size_t n : sizes) {
    for (double density : densities) {
      double p = density;
      if (sized && by_degree) p = n > 1 ? std::min(1.0, density / static_cast<double>(n - 1)) : 0.0;
      for (std::size_t limit : cfg.vertex_limits) {
        std::vector<RunRecord> runs;
        for (std::uint64_t seed : cfg.seeds) {
          const auto made = make_bench_graph(cfg, n, p, cfg.graph_seed.value_or(seed));
          for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
            SplitConfig split;
            split.vertex_limit = limit;
            split.seed = rep == 0 ? seed : detail::mix_seed(seed, rep);
            split.parts = cfg.parts;
            split.workers = cfg.workers;
            const auto t0 = clock::now();
            const CliqueResult r = split_solve(made.graph, split, named_solver(cfg.solver, cfg.solver_config));
            const double wall = std::chrono::duration<double>(clock::now() - t0).count();

            RunRecord rec;
            rec.experiment = cfg.experiment;
            rec.graph = made.description;
            rec.n = static_cast<double>(made.graph.num_vertices());
            rec.m = static_cast<double>(made.graph.num_edges());
            rec.solver = cfg.solver;
            rec.vertex_limit = limit;
            rec.seed = seed;
            rec.repetition = rep;
            rec.clique_size = static_cast<double>(r.size());
            rec.solver_calls = static_cast<double>(r.stats.subproblems_solved);
            rec.split_time_s = std::max(0.0, wall - r.stats.solver_seconds);
            rec.modeled_total_s = rec.split_time_s + cfg.per_call_time_model_s * rec.solver_calls;
            runs.push_back(std::move(rec));
          }
        }
        RunRecord summary = runs.front();
        summary.seed.reset();
        summary.repetition = 0;
        auto med = [&](double RunRecord::*field) {
          std::vector<double> xs;
          for (const auto& r : runs) xs.push_back(r.*field);
          return detail::median(std::move(xs));
        };
        summary.n = med(&RunRecord::n);
        summary.m = med(&RunRecord::m);
        summary.clique_size = med(&RunRecord::clique_size);
        summary.solver_calls = med(&RunRecord::solver_calls);
        summary.split_time_s = med(&RunRecord::split_time_s);
        summary.modeled_total_s = summary.split_time_s + cfg.per_call_time_model_s * summary.solver_calls;
        if (!cfg.graph_seed) {
          // Each seed generated its own graph; the summary names none of them.
          if (auto pos = summary.graph.find(" seed="); pos != std::string::npos) summary.graph.erase(pos);
        }
        records.insert(records.end(), runs.begin(), runs.end());
        records.push_back(std::move(summary));
      }
    }
  }
  return records;
}

/// Columns prefixed `wall_` hold measured times and differ between runs.
inline constexpr std::string_view kCsvHeader =
    "experiment,graph,n,m,solver,vertex_limit,seed,repetition,clique_size,solver_calls,"
    "wall_split_time_s,wall_modeled_total_s";

inline void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << detail::csv_field(r.experiment) << ',' << detail::csv_field(r.graph) << ',' << format_number(r.n)
        << ',' << format_number(r.m) << ',' << detail::csv_field(r.solver) << ',' << r.vertex_limit << ','
        << (r.seed ? std::to_string(*r.seed) : std::string("median")) << ',' << r.repetition << ','
        << format_number(r.clique_size) << ',' << format_number(r.solver_calls) << ','
        << format_number(r.split_time_s) << ',' << format_number(r.modeled_total_s) << '\n';
  }
}

inline std::string emit_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  emit_csv(records, out);
  return out.str();
}

}  // namespace cliquesplit

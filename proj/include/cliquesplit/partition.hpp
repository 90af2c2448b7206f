#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquesplit/errors.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/reduce.hpp"
#include "cliquesplit/rng.hpp"
#include "cliquesplit/solvers.hpp"

namespace cliquesplit {

// ---------------------------------------------------------------------------
// Core/halo partitioning

/// Disjoint cores covering V, each with its halo: the outside neighbors of
/// the core. Every maximum clique lies inside some C_i | H_i.
struct CHPartition {
  std::vector<std::vector<Vertex>> cores;
  std::vector<std::vector<Vertex>> halos;

  std::size_t parts() const noexcept { return cores.size(); }

  /// max_i |C_i| + |H_i|
  std::size_t cost() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < cores.size(); ++i) c = std::max(c, cores[i].size() + halos[i].size());
    return c;
  }

  /// Sorted union C_i | H_i.
  std::vector<Vertex> part(std::size_t i) const {
    std::vector<Vertex> out;
    std::set_union(cores[i].begin(), cores[i].end(), halos[i].begin(), halos[i].end(),
                   std::back_inserter(out));
    return out;
  }
};

inline std::vector<Vertex> halo_of(const Graph& g, std::span<const Vertex> core) {
  std::vector<bool> in_core(g.num_vertices(), false);
  for (Vertex v : core) in_core[v] = true;
  std::vector<Vertex> halo;
  for (Vertex v : core) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_core[w]) halo.push_back(w);
    }
  }
  std::sort(halo.begin(), halo.end());
  halo.erase(std::unique(halo.begin(), halo.end()), halo.end());
  return halo;
}

/// Checks the cores form a partition of V into nonempty sets and attaches
/// the exact halos.
inline CHPartition make_ch_partition(const Graph& g, std::vector<std::vector<Vertex>> cores) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::size_t covered = 0;
  for (auto& c : cores) {
    if (c.empty()) throw std::invalid_argument("empty core");
    std::sort(c.begin(), c.end());
    for (Vertex v : c) {
      if (v >= g.num_vertices()) throw std::out_of_range("core vertex out of range");
      if (seen[v]) throw std::invalid_argument("cores overlap at vertex " + std::to_string(v));
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != g.num_vertices()) throw std::invalid_argument("cores do not cover every vertex");
  CHPartition p;
  p.halos.reserve(cores.size());
  for (const auto& c : cores) p.halos.push_back(halo_of(g, c));
  p.cores = std::move(cores);
  return p;
}

namespace detail {

/// Per-core neighbor tallies so a boundary move can be costed in O(deg).
class HaloTally {
 public:
  HaloTally(const Graph& g, const std::vector<std::size_t>& owner, std::size_t parts)
      : g_(g), owner_(owner), count_(parts), core_size_(parts, 0), halo_size_(parts, 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      ++core_size_[owner[v]];
      for (Vertex w : g.neighbors(v)) bump(owner[v], w, +1);
    }
  }

  std::size_t part_cost(std::size_t i) const { return core_size_[i] + halo_size_[i]; }

  std::size_t cost() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < core_size_.size(); ++i) c = std::max(c, part_cost(i));
    return c;
  }

  std::size_t core_size(std::size_t i) const { return core_size_[i]; }

  void move(Vertex v, std::size_t to) {
    const std::size_t from = owner_[v];
    // v leaves core `from`: it becomes a halo vertex of `from` if it still has
    // neighbors there; it joins core `to` and stops being halo of `to`.
    --core_size_[from];
    ++core_size_[to];
    if (tally(from, v) > 0) ++halo_size_[from];
    if (tally(to, v) > 0) --halo_size_[to];
    owner_[v] = to;
    for (Vertex w : g_.neighbors(v)) {
      bump(from, w, -1);
      bump(to, w, +1);
    }
  }

 private:
  std::uint32_t tally(std::size_t part, Vertex w) const {
    auto it = count_[part].find(w);
    return it == count_[part].end() ? 0 : it->second;
  }

  void bump(std::size_t part, Vertex w, int delta) {
    auto& c = count_[part][w];
    const bool was = c > 0;
    c = static_cast<std::uint32_t>(static_cast<int>(c) + delta);
    const bool now = c > 0;
    if (owner_[w] != part && was != now) {
      if (now) {
        ++halo_size_[part];
      } else {
        --halo_size_[part];
      }
    }
    if (c == 0) count_[part].erase(w);
  }

  const Graph& g_;
  std::vector<std::size_t> owner_;
  std::vector<std::unordered_map<Vertex, std::uint32_t>> count_;
  std::vector<std::size_t> core_size_;
  std::vector<std::size_t> halo_size_;
};

}  // namespace detail

/// Greedy BFS region growing from s seeds spread over the degree ranking,
/// followed by one pass that moves boundary vertices to a neighboring core
/// whenever that lowers the partition cost.
inline CHPartition ch_partition(const Graph& g, std::size_t s, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (s < 1 || s > n) throw std::invalid_argument("part count must lie in [1, |V|]");
  if (s == 1) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return make_ch_partition(g, {std::move(all)});
  }

  Rng rng(seed);
  std::vector<std::uint64_t> tiebreak(n);
  for (auto& t : tiebreak) t = rng.next();
  std::vector<Vertex> ranked(n);
  std::iota(ranked.begin(), ranked.end(), Vertex{0});
  std::sort(ranked.begin(), ranked.end(), [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return tiebreak[a] < tiebreak[b];
  });

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kUnassigned);
  std::vector<std::size_t> size(s, 0);
  std::vector<std::deque<Vertex>> frontier(s);
  auto claim = [&](Vertex v, std::size_t r) {
    owner[v] = r;
    ++size[r];
    for (Vertex w : g.neighbors(v)) {
      if (owner[w] == kUnassigned) frontier[r].push_back(w);
    }
  };
  for (std::size_t r = 0; r < s; ++r) claim(ranked[r * n / s], r);

  std::size_t next_unreached = 0;
  for (;;) {
    // Grow the smallest region that still has a frontier.
    std::size_t pick = s;
    for (std::size_t r = 0; r < s; ++r) {
      while (!frontier[r].empty() && owner[frontier[r].front()] != kUnassigned) frontier[r].pop_front();
      if (!frontier[r].empty() && (pick == s || size[r] < size[pick])) pick = r;
    }
    if (pick == s) {
      // Components without a seed go to the smallest region.
      while (next_unreached < n && owner[ranked[next_unreached]] != kUnassigned) ++next_unreached;
      if (next_unreached == n) break;
      const auto smallest =
          static_cast<std::size_t>(std::min_element(size.begin(), size.end()) - size.begin());
      claim(ranked[next_unreached], smallest);
      continue;
    }
    const Vertex v = frontier[pick].front();
    frontier[pick].pop_front();
    claim(v, pick);
  }

  detail::HaloTally tally(g, owner, s);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t from = owner[v];
    if (tally.core_size(from) <= 1) continue;
    std::vector<std::size_t> targets;
    for (Vertex w : g.neighbors(v)) {
      if (owner[w] != from) targets.push_back(owner[w]);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t to : targets) {
      const auto before = std::pair(tally.cost(), std::max(tally.part_cost(from), tally.part_cost(to)));
      tally.move(v, to);
      const auto after = std::pair(tally.cost(), std::max(tally.part_cost(from), tally.part_cost(to)));
      if (after < before) {
        owner[v] = to;
        break;
      }
      tally.move(v, from);
    }
  }

  std::vector<std::vector<Vertex>> cores(s);
  for (Vertex v = 0; v < n; ++v) cores[owner[v]].push_back(v);
  return make_ch_partition(g, std::move(cores));
}

/// Partitioning strategy plug point: (graph, parts, seed) -> CHPartition.
using Partitioner = std::function<CHPartition(const Graph&, std::size_t, std::uint64_t)>;

/// Tries s = 1, 2, 4, ... up to max(2, 2 |V| / vertex_limit) and keeps the
/// cheapest partition (ties to the smaller s).
inline CHPartition auto_ch_partition(const Graph& g, std::size_t vertex_limit, std::uint64_t seed,
                                     const Partitioner& partitioner = ch_partition) {
  const std::size_t n = g.num_vertices();
  const std::size_t top = std::min(n, std::max<std::size_t>(2, 2 * n / std::max<std::size_t>(vertex_limit, 1)));
  CHPartition best = partitioner(g, 1, seed);
  for (std::size_t s = 2; s <= top; s *= 2) {
    CHPartition p = partitioner(g, s, seed);
    if (p.cost() < best.cost()) best = std::move(p);
  }
  return best;
}

/// Maximum clique size from the per-part maxima.
inline std::size_t combine_ch(std::span<const std::size_t> part_clique_sizes) {
  if (part_clique_sizes.empty()) throw std::invalid_argument("no part results to combine");
  return *std::max_element(part_clique_sizes.begin(), part_clique_sizes.end());
}

// ---------------------------------------------------------------------------
// Vertex splitting

struct VertexSplit {
  Graph neighborhood;  // induced by N(v), v excluded
  Graph rest;          // g - v
};

inline VertexSplit vertex_split(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
  return {neighborhood_subgraph(g, v), remove_vertex(g, v)};
}

/// omega(g) from omega of the neighborhood side and omega of the rest.
constexpr std::size_t combine_split(std::size_t neighborhood_clique, std::size_t rest_clique) {
  return std::max(neighborhood_clique + 1, rest_clique);
}

enum class VertexRule { kMaxDegree, kMedianDegree, kMinDegree };

/// Vertex selected by `rule`; ties go to the smallest id. The median is the
/// lower median of the sorted degree sequence.
inline Vertex choose_vertex(const Graph& g, VertexRule rule) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("cannot choose a vertex of an empty graph");
  std::size_t target = 0;
  switch (rule) {
    case VertexRule::kMaxDegree:
      target = g.max_degree();
      break;
    case VertexRule::kMinDegree: {
      target = g.degree(0);
      for (Vertex v = 1; v < n; ++v) target = std::min(target, g.degree(v));
      break;
    }
    case VertexRule::kMedianDegree: {
      std::vector<std::size_t> deg(n);
      for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
      auto mid = deg.begin() + static_cast<std::ptrdiff_t>((n - 1) / 2);
      std::nth_element(deg.begin(), mid, deg.end());
      target = *mid;
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == target) return v;
  }
  return 0;  // unreachable
}

/// Successive split candidates for one subgraph: highest, median, lowest
/// degree, skipping repeats.
class VertexChooser {
 public:
  explicit VertexChooser(const Graph& g) : g_(g) {
    if (g.empty()) throw std::invalid_argument("cannot choose a vertex of an empty graph");
  }

  /// True when the minimum degree is |V| - 1: the graph is itself a clique.
  bool is_clique() const { return g_.degree(choose_vertex(g_, VertexRule::kMinDegree)) + 1 == g_.num_vertices(); }

  std::optional<Vertex> next() {
    static constexpr VertexRule kOrder[] = {VertexRule::kMaxDegree, VertexRule::kMedianDegree,
                                            VertexRule::kMinDegree};
    while (step_ < std::size(kOrder)) {
      const Vertex v = choose_vertex(g_, kOrder[step_++]);
      if (std::find(used_.begin(), used_.end(), v) == used_.end()) {
        used_.push_back(v);
        return v;
      }
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  std::size_t step_ = 0;
  std::vector<Vertex> used_;
};

// ---------------------------------------------------------------------------
// Decomposition driver

/// Subproblem solver: (subgraph, seed) -> clique in the subgraph's labels.
template <class S>
concept SubproblemSolver = std::invocable<S&, const Graph&, std::uint64_t> &&
    std::convertible_to<std::invoke_result_t<S&, const Graph&, std::uint64_t>, CliqueResult>;

/// Backend failure on a subproblem, with the subproblem kept for replay.
class SolverFailure : public Error {
 public:
  SolverFailure(Graph subproblem, const std::string& what)
      : Error("subproblem solver failed on " + std::to_string(subproblem.num_vertices()) +
              "-vertex subgraph: " + what),
        subproblem_(std::move(subproblem)) {}

  const Graph& subproblem() const noexcept { return subproblem_; }

 private:
  Graph subproblem_;
};

/// How the driver picks the split vertex among the chooser's candidates.
enum class SplitPolicy {
  kFirstFit,     // first candidate whose reduced neighborhood fits the limit, else the last
  kSmallest,     // candidate with the smallest reduced neighborhood
  kMinDegreeOnly,
  kMaxDegreeOnly,
};

struct SplitConfig {
  std::size_t vertex_limit = 45;
  SplitPolicy policy = SplitPolicy::kFirstFit;
  std::uint64_t seed = 0;
  /// Number of CH-partition parts; 0 selects automatically.
  std::size_t parts = 0;
  /// Known clique size to prune against; the greedy clique is used when larger.
  std::optional<std::size_t> lower_bound;
  /// Worker threads for subproblem solves; 1 solves inline.
  std::size_t workers = 1;
  /// Cap on worklist pops; 0 means unlimited.
  std::uint64_t max_splits = 0;
  EdgePruning pruning = EdgePruning::kRandomVertex;
  Partitioner partitioner = ch_partition;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A subgraph plus the clique (labels) every clique inside it extends.
struct Subproblem {
  Graph graph;
  std::vector<Vertex> anchor;
};

/// Incumbent clique shared between the driver and solve workers. The lower
/// bound only ever grows.
class Incumbent {
 public:
  explicit Incumbent(std::vector<Vertex> clique, std::size_t floor)
      : clique_(std::move(clique)), bound_(std::max(floor, clique_.size())) {}

  std::size_t bound() const noexcept { return bound_.load(std::memory_order_acquire); }

  /// Installs the clique if it beats the current bound (first found wins ties).
  void offer(std::vector<Vertex> clique) {
    std::lock_guard lock(mu_);
    if (clique.size() > bound_.load(std::memory_order_relaxed)) {
      std::sort(clique.begin(), clique.end());
      clique_ = std::move(clique);
      bound_.store(clique_.size(), std::memory_order_release);
    }
  }

  std::vector<Vertex> clique() const {
    std::lock_guard lock(mu_);
    return clique_;
  }

 private:
  mutable std::mutex mu_;
  std::vector<Vertex> clique_;
  std::atomic<std::size_t> bound_;
};

/// Runs solve jobs inline or on a fixed pool of worker threads.
class SolvePool {
 public:
  using Job = std::function<void()>;

  explicit SolvePool(std::size_t workers) {
    if (workers <= 1) return;
    for (std::size_t i = 0; i < workers; ++i) {
      threads_.emplace_back([this] { work(); });
    }
  }

  SolvePool(const SolvePool&) = delete;
  SolvePool& operator=(const SolvePool&) = delete;

  ~SolvePool() { finish_quietly(); }

  void submit(Job job) {
    if (threads_.empty()) {
      job();
      return;
    }
    {
      std::lock_guard lock(mu_);
      if (error_) std::rethrow_exception(error_);
      jobs_.push_back(std::move(job));
    }
    cv_.notify_one();
  }

  /// Waits for every job; rethrows the first job failure.
  void finish() {
    finish_quietly();
    if (error_) std::rethrow_exception(error_);
  }

 private:
  void finish_quietly() {
    {
      std::lock_guard lock(mu_);
      closing_ = true;
    }
    cv_.notify_all();
    threads_.clear();  // jthread joins
  }

  void work() {
    for (;;) {
      Job job;
      {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return closing_ || !jobs_.empty(); });
        if (jobs_.empty()) return;
        job = std::move(jobs_.front());
        jobs_.pop_front();
      }
      try {
        job();
      } catch (...) {
        std::lock_guard lock(mu_);
        if (!error_) error_ = std::current_exception();
      }
    }
  }

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Job> jobs_;
  bool closing_ = false;
  std::exception_ptr error_;
  std::vector<std::jthread> threads_;
};

}  // namespace detail

/// Maximum clique of g using subproblems of at most vertex_limit vertices.
///
/// Pipeline: greedy lower bound, k-core, CH-partitioning, then a worklist
/// ordered by subgraph size. The largest subgraph is popped and split on a
/// chosen vertex v into N(v) (with v recorded as an anchor) and sg - v; both
/// sides are reduced against the current bound and are either solved,
/// requeued, or dropped. Anything that fits the limit goes to `solver`.
/// With an exact solver the result is a maximum clique.
template <SubproblemSolver Solver>
CliqueResult split_solve(const Graph& g, const SplitConfig& cfg, Solver&& solver) {
  if (cfg.vertex_limit < 1) throw std::invalid_argument("vertex_limit must be at least 1");
  using clock = std::chrono::steady_clock;

  CliqueResult result;
  result.solver_name = "split";
  std::atomic<std::size_t> calls{0};
  std::atomic<std::int64_t> solver_ns{0};
  std::size_t reductions = 0;
  std::size_t splits = 0;
  std::uint64_t counter = 0;

  auto timed_solve = [&](const Graph& sub, std::uint64_t seed) -> CliqueResult {
    const auto t0 = clock::now();
    CliqueResult r;
    try {
      r = std::invoke(solver, sub, seed);
    } catch (const std::exception& e) {
      throw SolverFailure(sub, e.what());
    }
    solver_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
    calls.fetch_add(1);
    if (!is_clique(sub, r.vertices)) throw SolverFailure(sub, "returned vertex set is not a clique");
    return r;
  };

  auto finish = [&](std::vector<Vertex> clique) {
    result.vertices = std::move(clique);
    result.stats.subproblems_solved = calls.load();
    result.stats.reductions = reductions;
    result.stats.vertex_splits = splits;
    result.stats.solver_seconds = static_cast<double>(solver_ns.load()) * 1e-9;
    return result;
  };

  if (g.empty()) return finish({});
  if (g.num_vertices() <= cfg.vertex_limit) {
    return finish(timed_solve(g, detail::mix_seed(cfg.seed, 0)).vertices);
  }

  detail::Incumbent incumbent(to_labels(g, greedy_clique(g)), cfg.lower_bound.value_or(0));
  detail::SolvePool pool(cfg.workers);

  auto anchored_bound = [&](std::size_t anchor) {
    const std::size_t lb = incumbent.bound();
    return lb > anchor ? lb - anchor : 0;
  };
  auto reduce = [&](const Graph& sub, std::size_t anchor) {
    ++reductions;
    return reduce_graph(sub, anchored_bound(anchor), detail::mix_seed(cfg.seed, ++counter), cfg.pruning).graph;
  };
  auto dispatch = [&](Graph sub, std::vector<Vertex> anchor) {
    const std::uint64_t seed = detail::mix_seed(cfg.seed, ++counter);
    pool.submit([&, sub = std::move(sub), anchor = std::move(anchor), seed]() mutable {
      // Skip work the bound has overtaken since the subproblem was queued.
      if (anchor.size() + sub.num_vertices() <= incumbent.bound()) return;
      CliqueResult r = timed_solve(sub, seed);
      anchor.insert(anchor.end(), r.vertices.begin(), r.vertices.end());
      incumbent.offer(std::move(anchor));
    });
  };

  // Worklist ordered by vertex count; the largest sits at the back.
  std::multimap<std::size_t, detail::Subproblem> worklist;
  // `sub` must already be reduced against the current bound.
  auto place = [&](Graph sub, std::vector<Vertex> anchor) {
    if (sub.empty()) {
      incumbent.offer(std::move(anchor));
      return;
    }
    if (sub.num_vertices() <= cfg.vertex_limit) {
      dispatch(std::move(sub), std::move(anchor));
    } else {
      const std::size_t key = sub.num_vertices();
      worklist.emplace(key, detail::Subproblem{std::move(sub), std::move(anchor)});
    }
  };

  ++reductions;
  const Graph core = k_core(g, incumbent.bound());
  if (!core.empty()) {
    const CHPartition partition = cfg.parts == 0
                                      ? auto_ch_partition(core, cfg.vertex_limit, cfg.seed, cfg.partitioner)
                                      : cfg.partitioner(core, std::min(cfg.parts, core.num_vertices()), cfg.seed);
    result.stats.partition_parts = partition.parts();
    if (partition.parts() == 1) {
      place(core, {});
    } else {
      for (std::size_t i = 0; i < partition.parts(); ++i) {
        place(reduce(induced_subgraph(core, partition.part(i)), 0), {});
      }
    }
  }

  while (!worklist.empty()) {
    auto node = worklist.extract(std::prev(worklist.end()));
    detail::Subproblem sg = std::move(node.mapped());
    if (cfg.max_splits != 0 && splits >= cfg.max_splits) {
      pool.finish();
      throw Error("decomposition exceeded " + std::to_string(cfg.max_splits) + " splits");
    }

    VertexChooser chooser(sg.graph);
    if (chooser.is_clique()) {
      std::vector<Vertex> clique = sg.anchor;
      clique.insert(clique.end(), sg.graph.labels().begin(), sg.graph.labels().end());
      incumbent.offer(std::move(clique));
      continue;
    }
    ++splits;

    // First candidate whose reduced neighborhood fits the limit, else the last.
    const std::size_t child_anchor = sg.anchor.size() + 1;
    Vertex v = 0;
    Graph neighborhood;
    if (cfg.policy == SplitPolicy::kMinDegreeOnly || cfg.policy == SplitPolicy::kMaxDegreeOnly) {
      v = choose_vertex(sg.graph, cfg.policy == SplitPolicy::kMinDegreeOnly ? VertexRule::kMinDegree
                                                                             : VertexRule::kMaxDegree);
      neighborhood = reduce(neighborhood_subgraph(sg.graph, v), child_anchor);
    } else {
      bool have = false;
      while (auto candidate = chooser.next()) {
        Graph nb = reduce(neighborhood_subgraph(sg.graph, *candidate), child_anchor);
        const bool fits = nb.num_vertices() <= cfg.vertex_limit;
        if (!have || cfg.policy == SplitPolicy::kFirstFit || nb.num_vertices() < neighborhood.num_vertices()) {
          v = *candidate;
          neighborhood = std::move(nb);
          have = true;
        }
        if (cfg.policy == SplitPolicy::kFirstFit && fits) break;
      }
    }
    std::vector<Vertex> anchor_with_v = sg.anchor;
    anchor_with_v.push_back(sg.graph.label(v));

    place(reduce(remove_vertex(sg.graph, v), sg.anchor.size()), std::move(sg.anchor));
    place(std::move(neighborhood), std::move(anchor_with_v));
  }
  pool.finish();

  auto best = incumbent.clique();
  if (!is_clique(g, best)) throw std::logic_error("decomposition produced a non-clique");
  return finish(std::move(best));
}

/// Decides whether g has a clique of at least m vertices by running the
/// decomposition with lower bound m - 1.
template <SubproblemSolver Solver>
bool split_has_clique_of_size(const Graph& g, std::size_t m, SplitConfig cfg, Solver&& solver) {
  if (m == 0) return true;
  cfg.lower_bound = m - 1;
  return split_solve(g, cfg, std::forward<Solver>(solver)).size() >= m;
}

struct SweepRow {
  std::size_t vertex_limit;
  std::size_t solver_calls;
};

/// split_solve once per vertex limit (ascending) with the same seed.
template <SubproblemSolver Solver>
std::vector<SweepRow> sweep_vertex_limit(const Graph& g, std::span<const std::size_t> limits,
                                         const SplitConfig& base, Solver&& solver) {
  if (!std::is_sorted(limits.begin(), limits.end())) throw std::invalid_argument("limits must be ascending");
  std::vector<SweepRow> rows;
  for (std::size_t limit : limits) {
    SplitConfig cfg = base;
    cfg.vertex_limit = limit;
    rows.push_back({limit, split_solve(g, cfg, solver).stats.subproblems_solved});
  }
  return rows;
}

/// Adapts solve_mc to the subproblem-solver signature.
inline auto named_solver(std::string name, SolverConfig base = {}) {
  return [name = std::move(name), base](const Graph& sub, std::uint64_t seed) {
    SolverConfig cfg = base;
    cfg.seed = seed;
    return solve_mc(sub, name, cfg);
  };
}

}  // namespace cliquesplit

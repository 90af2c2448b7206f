#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquesplit/errors.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/qubo.hpp"
#include "cliquesplit/rng.hpp"

namespace cliquesplit {

struct SolverConfig {
  std::uint64_t seed = 0;
  /// Node budget for the exact solver, iteration budget for the annealers.
  /// Zero selects the backend default (unlimited for exact).
  std::uint64_t budget = 0;
  double alpha = 0.9996;
  /// Zero means calibrate from probe moves.
  double initial_temperature = 0.0;
  std::size_t num_reads = 100;
};

inline void validate(const SolverConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (cfg.initial_temperature < 0.0) throw std::invalid_argument("initial temperature must be positive");
}

/// Raised when a solver runs out of budget; carries the best clique found.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(CliqueResult best)
      : Error("solver budget exhausted with best clique of size " + std::to_string(best.size())),
        best_(std::move(best)) {}

  const CliqueResult& best() const noexcept { return best_; }

 private:
  CliqueResult best_;
};

/// Greedy maximal clique: repeatedly add the highest-degree vertex adjacent to
/// everything chosen so far (ties to the smallest id). Local ids, ascending.
inline std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> candidates(g.num_vertices());
  std::iota(candidates.begin(), candidates.end(), Vertex{0});
  std::vector<Vertex> clique;
  while (!candidates.empty()) {
    Vertex pick = candidates.front();
    for (Vertex v : candidates) {
      if (g.degree(v) > g.degree(pick)) pick = v;
    }
    clique.push_back(pick);
    std::vector<Vertex> next;
    auto nb = g.neighbors(pick);
    std::set_intersection(candidates.begin(), candidates.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    candidates = std::move(next);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// ---------------------------------------------------------------------------
// Exact branch and bound

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// Index of the lowest set bit, or npos.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k]) return (k << 6) + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return npos;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

/// Smallest-last (degeneracy) elimination order.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_deg = std::max(max_deg, degree[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_deg + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::vector<bool> done(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = std::min(d, max_deg);
    while (buckets[d].empty()) ++d;
    const Vertex v = buckets[d].back();
    buckets[d].pop_back();
    if (done[v] || degree[v] != d) continue;  // stale entry
    done[v] = true;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!done[w]) {
        --degree[w];
        buckets[degree[w]].push_back(w);
        if (degree[w] < d) d = degree[w];
      }
    }
  }
  return order;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::uint64_t node_budget) : g_(g), budget_(node_budget) {
    const std::size_t n = g.num_vertices();
    // Vertices eliminated last sit in the densest core; they get the low
    // indices, which the coloring visits first.
    auto order = degeneracy_order(g);
    std::reverse(order.begin(), order.end());
    to_local_ = order;
    std::vector<Vertex> position(n);
    for (Vertex i = 0; i < n; ++i) position[order[i]] = i;
    adj_.assign(n, Bitset(n));
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex w : g.neighbors(order[i])) adj_[i].set(position[w]);
    }
    for (Vertex v : greedy_clique(g)) best_.push_back(position[v]);
  }

  std::vector<Vertex> run() {
    Bitset all(g_.num_vertices());
    for (std::size_t i = 0; i < g_.num_vertices(); ++i) all.set(i);
    std::vector<Vertex> current;
    expand(current, all);
    return local_best();
  }

  std::vector<Vertex> local_best() const {
    std::vector<Vertex> out;
    for (Vertex i : best_) out.push_back(to_local_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(std::vector<Vertex>& current, Bitset candidates) {
    if (budget_ != 0 && ++nodes_ > budget_) throw budget_error();

    // Greedy coloring; only vertices whose color can still beat the incumbent
    // become branching points.
    const std::size_t min_color =
        best_.size() >= current.size() ? best_.size() - current.size() + 1 : 1;
    std::vector<Vertex> branch;
    std::vector<std::size_t> color;
    Bitset uncolored = candidates;
    std::size_t k = 1;
    while (!uncolored.none()) {
      Bitset cls = uncolored;
      for (std::size_t v = cls.first(); v != Bitset::npos; v = cls.first()) {
        cls.reset(v);
        cls.and_not(adj_[v]);
        uncolored.reset(v);
        if (k >= min_color) {
          branch.push_back(static_cast<Vertex>(v));
          color.push_back(k);
        }
      }
      ++k;
    }

    for (std::size_t idx = branch.size(); idx-- > 0;) {
      if (current.size() + color[idx] <= best_.size()) return;
      const Vertex v = branch[idx];
      current.push_back(v);
      Bitset next = candidates;
      next &= adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  BudgetExhausted budget_error() const {
    CliqueResult r;
    r.vertices = to_labels(g_, local_best());
    r.solver_name = "exact";
    return BudgetExhausted(std::move(r));
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> to_local_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// Maximum clique by branch and bound with a greedy-coloring bound over a
/// degeneracy vertex order. node_budget == 0 means unlimited; otherwise
/// exceeding it throws BudgetExhausted carrying the incumbent.
inline CliqueResult exact_max_clique(const Graph& g, std::uint64_t node_budget = 0) {
  CliqueResult r;
  r.solver_name = "exact";
  r.stats.subproblems_solved = 1;
  if (g.empty()) return r;
  detail::CliqueSearch search(g, node_budget);
  r.vertices = to_labels(g, search.run());
  return r;
}

// ---------------------------------------------------------------------------
// Annealing

namespace detail {

/// Temperature at which the mean uphill probe move is accepted half the time.
inline double calibrate_temperature(const std::vector<double>& uphill) {
  if (uphill.empty()) return 1.0;
  const double mean = std::accumulate(uphill.begin(), uphill.end(), 0.0) / uphill.size();
  return mean / std::log(2.0);
}

/// Geometric schedule T <- alpha T, reheated to T0 once it freezes.
class CoolingSchedule {
 public:
  CoolingSchedule(double t0, double alpha) : t0_(t0), t_(t0), alpha_(alpha) {}

  double temperature() const noexcept { return t_; }

  void step() {
    t_ *= alpha_;
    if (t_ < t0_ * 1e-4) t_ = t0_;
  }

 private:
  double t0_;
  double t_;
  double alpha_;
};

inline bool metropolis(Rng& rng, double delta, double temperature) {
  return delta <= 0.0 || rng.unit() < std::exp(-delta / temperature);
}

}  // namespace detail

constexpr std::uint64_t kDefaultSaCliqueBudget = 200000;
constexpr std::uint64_t kDefaultSaQuboBudget = 50000;

/// Searches for a clique of exactly m vertices. The state is an m-subset; its
/// energy is the number of non-adjacent pairs inside it. A move swaps one
/// member for one non-member. Returns the clique (labels) or nullopt when the
/// iteration budget runs out.
inline std::optional<CliqueResult> sa_clique(const Graph& g, std::size_t m, const SolverConfig& cfg) {
  validate(cfg);
  const std::size_t n = g.num_vertices();
  if (m < 1 || m > n) throw std::invalid_argument("clique size must lie in [1, |V|]");
  Rng rng(cfg.seed);

  // members[0, m) inside, members[m, n) outside; slot[v] is v's position.
  std::vector<Vertex> members(n);
  std::iota(members.begin(), members.end(), Vertex{0});
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(members[i], members[i + rng.below(n - i)]);
  }
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[members[i]] = i;

  // conflicts[v]: members other than v that are not adjacent to v.
  std::vector<std::int64_t> conflicts(n, static_cast<std::int64_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = members[i];
    --conflicts[u];
    for (Vertex w : g.neighbors(u)) --conflicts[w];
  }
  std::int64_t energy = 0;
  for (std::size_t i = 0; i < m; ++i) energy += conflicts[members[i]];
  energy /= 2;

  auto result = [&]() {
    CliqueResult r;
    r.vertices = to_labels(g, std::span<const Vertex>(members.data(), m));
    r.solver_name = "sa-clique";
    r.stats.subproblems_solved = 1;
    return r;
  };
  if (energy == 0) return result();
  if (m == n) return std::nullopt;

  auto propose = [&](Vertex& u, Vertex& w) {
    u = members[rng.below(m)];
    w = members[m + rng.below(n - m)];
    return static_cast<double>(conflicts[w] - conflicts[u] - (g.adjacent(u, w) ? 0 : 1));
  };

  double t0 = cfg.initial_temperature;
  if (t0 == 0.0) {
    std::vector<double> uphill;
    for (int probe = 0; probe < 100; ++probe) {
      Vertex u, w;
      const double d = propose(u, w);
      if (d > 0) uphill.push_back(d);
    }
    t0 = detail::calibrate_temperature(uphill);
  }
  detail::CoolingSchedule schedule(t0, cfg.alpha);

  const std::uint64_t budget = cfg.budget ? cfg.budget : kDefaultSaCliqueBudget;
  for (std::uint64_t it = 0; it < budget; ++it) {
    Vertex u, w;
    const double delta = propose(u, w);
    if (detail::metropolis(rng, delta, schedule.temperature())) {
      const bool linked = g.adjacent(u, w);
      for (Vertex x : g.neighbors(u)) {
        if (x != w) ++conflicts[x];
      }
      for (Vertex x : g.neighbors(w)) {
        if (x != u) --conflicts[x];
      }
      if (!linked) {
        ++conflicts[u];
        --conflicts[w];
      }
      std::swap(members[slot[u]], members[slot[w]]);
      std::swap(slot[u], slot[w]);
      energy += static_cast<std::int64_t>(delta);
      if (energy == 0) return result();
    }
    schedule.step();
  }
  return std::nullopt;
}

/// Largest m in [1, upper] for which the monotone predicate holds (0 if it
/// fails at 1). Probes both ends first, then bisects. A predicate that holds
/// above a size where it failed throws std::logic_error.
template <class Predicate>
  requires std::invocable<Predicate&, std::size_t>
std::size_t binary_search_max_clique(std::size_t upper, Predicate&& has_clique_of_size) {
  if (upper == 0) return 0;
  auto test = [&](std::size_t m) { return static_cast<bool>(std::invoke(has_clique_of_size, m)); };
  const bool at_one = test(1);
  if (upper == 1) return at_one ? 1 : 0;
  const bool at_top = test(upper);
  if (!at_one) {
    if (at_top) throw std::logic_error("non-monotone clique predicate");
    return 0;
  }
  if (at_top) return upper;
  std::size_t lo = 1;     // holds
  std::size_t hi = upper;  // fails
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (test(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Same search with the upper end set to max degree + 1.
template <class Predicate>
  requires std::invocable<Predicate&, std::size_t>
std::size_t binary_search_max_clique(const Graph& g, Predicate&& has_clique_of_size) {
  if (g.empty()) return 0;
  return binary_search_max_clique(std::min(g.num_vertices(), g.max_degree() + 1),
                                  std::forward<Predicate>(has_clique_of_size));
}

/// Single-bit-flip Metropolis annealing from a uniform random start. Returns
/// the lowest-energy assignment visited.
inline QuboMinimum sa_qubo(const Qubo& q, const SolverConfig& cfg) {
  validate(cfg);
  const std::size_t n = q.num_variables();
  QuboMinimum best;
  if (n == 0) return best;
  const CompiledQubo cq(q);
  Rng rng(cfg.seed);
  BinaryAssignment x(n);
  for (auto& bit : x) bit = static_cast<std::uint8_t>(rng.next() & 1U);
  double energy = evaluate(q, x);
  best = {x, energy};

  double t0 = cfg.initial_temperature;
  if (t0 == 0.0) {
    std::vector<double> uphill;
    for (int probe = 0; probe < 100; ++probe) {
      const double d = cq.flip_delta(x, rng.below(n));
      if (d > 0) uphill.push_back(d);
    }
    t0 = detail::calibrate_temperature(uphill);
  }
  detail::CoolingSchedule schedule(t0, cfg.alpha);

  const std::uint64_t budget = cfg.budget ? cfg.budget : kDefaultSaQuboBudget;
  for (std::uint64_t it = 0; it < budget; ++it) {
    const std::size_t i = rng.below(n);
    const double delta = cq.flip_delta(x, i);
    if (detail::metropolis(rng, delta, schedule.temperature())) {
      x[i] ^= 1;
      energy += delta;
      if (energy < best.energy) best = {x, energy};
    }
    schedule.step();
  }
  best.energy = evaluate(q, best.assignment);
  return best;
}

/// Best-improvement single-bit descent to a 1-flip local minimum. Among
/// equally good flips the lowest index wins.
inline QuboMinimum local_search_descent(const Qubo& q, BinaryAssignment start) {
  if (start.size() != q.num_variables()) throw std::invalid_argument("assignment length mismatch");
  const CompiledQubo cq(q);
  BinaryAssignment x = std::move(start);
  for (;;) {
    double best_delta = 0.0;
    std::size_t best_i = x.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = cq.flip_delta(x, i);
      if (d < best_delta) {
        best_delta = d;
        best_i = i;
      }
    }
    if (best_i == x.size()) break;
    x[best_i] ^= 1;
  }
  const double energy = evaluate(q, x);
  return {std::move(x), energy};
}

// ---------------------------------------------------------------------------
// Sampler contract (annealer stand-in)

struct Sample {
  BinaryAssignment assignment;
  double energy = 0.0;
};

/// Samples ordered by ascending energy.
struct SampleSet {
  std::vector<Sample> samples;

  static SampleSet from_assignments(const Qubo& q, std::vector<BinaryAssignment> xs) {
    SampleSet s;
    s.samples.reserve(xs.size());
    for (auto& x : xs) {
      const double e = evaluate(q, x);
      s.samples.push_back({std::move(x), e});
    }
    std::stable_sort(s.samples.begin(), s.samples.end(),
                     [](const Sample& a, const Sample& b) { return a.energy < b.energy; });
    return s;
  }
};

template <class S>
concept QuboSampler = requires(S& s, const Qubo& q, std::size_t num_reads, std::uint64_t seed) {
  { s.sample(q, num_reads, seed) } -> std::convertible_to<SampleSet>;
};

/// Each read is a short independent sa_qubo run.
struct MockSampler {
  std::uint64_t iterations_per_read = 1000;
  double alpha = 0.99;

  SampleSet sample(const Qubo& q, std::size_t num_reads, std::uint64_t seed) const {
    Rng seeds(seed);
    std::vector<BinaryAssignment> xs;
    xs.reserve(num_reads);
    for (std::size_t r = 0; r < num_reads; ++r) {
      SolverConfig cfg;
      cfg.seed = seeds.next();
      cfg.budget = iterations_per_read;
      cfg.alpha = alpha;
      xs.push_back(sa_qubo(q, cfg).assignment);
    }
    return SampleSet::from_assignments(q, std::move(xs));
  }
};

/// Draws num_reads samples, polishes each by local_search_descent and keeps
/// the best (first on ties).
template <QuboSampler Sampler>
QuboMinimum sampler_solve(const Qubo& q, Sampler& sampler, const SolverConfig& cfg) {
  if (cfg.num_reads == 0) throw std::invalid_argument("num_reads must be positive");
  const SampleSet set = sampler.sample(q, cfg.num_reads, cfg.seed);
  if (set.samples.empty()) throw Error("sampler returned no samples");
  std::optional<QuboMinimum> best;
  for (const Sample& s : set.samples) {
    auto polished = local_search_descent(q, s.assignment);
    if (!best || polished.energy < best->energy) best = std::move(polished);
  }
  return std::move(*best);
}

// ---------------------------------------------------------------------------
// Facade

inline const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"exact", "sa-clique", "sa-qubo", "descent", "sampler"};
  return names;
}

/// Turns an arbitrary vertex selection into a clique by repeatedly dropping
/// the lowest-degree vertex (ties: smallest id) that sits in a non-adjacent
/// selected pair. Local ids in and out.
inline std::vector<Vertex> repair_clique(const Graph& g, std::vector<Vertex> selected) {
  for (;;) {
    std::vector<bool> involved(selected.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < selected.size(); ++i) {
      for (std::size_t j = i + 1; j < selected.size(); ++j) {
        if (!g.adjacent(selected[i], selected[j])) {
          involved[i] = involved[j] = true;
          any = true;
        }
      }
    }
    if (!any) return selected;
    std::size_t drop = selected.size();
    for (std::size_t i = 0; i < selected.size(); ++i) {
      if (!involved[i]) continue;
      if (drop == selected.size() || g.degree(selected[i]) < g.degree(selected[drop]) ||
          (g.degree(selected[i]) == g.degree(selected[drop]) && selected[i] < selected[drop])) {
        drop = i;
      }
    }
    selected.erase(selected.begin() + static_cast<std::ptrdiff_t>(drop));
  }
}

namespace detail {

inline CliqueResult decode(const Graph& g, const QuboMinimum& m, std::string name) {
  std::vector<Vertex> selected;
  for (Vertex v = 0; v < m.assignment.size(); ++v) {
    if (m.assignment[v]) selected.push_back(v);
  }
  CliqueResult r;
  r.vertices = to_labels(g, repair_clique(g, std::move(selected)));
  r.solver_name = std::move(name);
  r.energy = m.energy;
  r.stats.subproblems_solved = 1;
  return r;
}

}  // namespace detail

/// Maximum clique of g with the named backend. Every backend returns a valid
/// clique; only "exact" guarantees maximality.
inline CliqueResult solve_mc(const Graph& g, std::string_view solver_name, const SolverConfig& cfg) {
  validate(cfg);
  const std::string name(solver_name);
  if (std::find(solver_names().begin(), solver_names().end(), name) == solver_names().end()) {
    throw std::invalid_argument("unknown solver '" + name + "'");
  }
  if (g.empty()) {
    CliqueResult r;
    r.solver_name = name;
    r.stats.subproblems_solved = 1;
    return r;
  }
  if (name == "exact") return exact_max_clique(g, cfg.budget);
  if (name == "sa-clique") {
    std::optional<CliqueResult> witness;
    binary_search_max_clique(g, [&](std::size_t m) {
      SolverConfig sub = cfg;
      sub.seed = cfg.seed ^ (0x9e3779b97f4a7c15ULL * (m + 1));
      auto found = sa_clique(g, m, sub);
      if (found && (!witness || found->size() > witness->size())) witness = std::move(found);
      return witness && witness->size() >= m;
    });
    CliqueResult r = witness ? std::move(*witness) : CliqueResult{};
    r.solver_name = name;
    return r;
  }
  const Qubo q = mc_to_qubo(g);
  if (name == "sa-qubo") return detail::decode(g, sa_qubo(q, cfg), name);
  if (name == "descent") {
    Rng rng(cfg.seed);
    BinaryAssignment start(g.num_vertices());
    for (auto& bit : start) bit = static_cast<std::uint8_t>(rng.next() & 1U);
    return detail::decode(g, local_search_descent(q, std::move(start)), name);
  }
  MockSampler sampler;
  return detail::decode(g, sampler_solve(q, sampler, cfg), name);
}

}  // namespace cliquesplit

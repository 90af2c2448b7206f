#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliquesplit/graph.hpp"
#include "cliquesplit/rng.hpp"

namespace cliquesplit {

/// C(rows, cols, shore): a rows x cols grid of K_{shore,shore} cells.
struct ChimeraSpec {
  std::size_t rows = 12;
  std::size_t cols = 12;
  std::size_t shore = 4;
};

enum class Orientation : std::uint8_t { kVertical = 0, kHorizontal = 1 };

/// Qubit (row, col, orientation, k) linearized row-major:
/// ((row * cols + col) * 2 + orientation) * shore + k.
inline Vertex chimera_index(const ChimeraSpec& s, std::size_t row, std::size_t col,
                            Orientation o, std::size_t k) {
  return static_cast<Vertex>(((row * s.cols + col) * 2 + static_cast<std::size_t>(o)) * s.shore + k);
}

struct ChimeraCoord {
  std::size_t row;
  std::size_t col;
  Orientation orientation;
  std::size_t k;
};

inline ChimeraCoord chimera_coord(const ChimeraSpec& s, Vertex v) {
  ChimeraCoord c{};
  c.k = v % s.shore;
  std::size_t rest = v / s.shore;
  c.orientation = static_cast<Orientation>(rest % 2);
  rest /= 2;
  c.col = rest % s.cols;
  c.row = rest / s.cols;
  return c;
}

inline std::size_t chimera_edge_count(const ChimeraSpec& s) {
  const auto [m, n, l] = s;
  return l * l * m * n + l * (m - 1) * n + l * m * (n - 1);
}

inline Graph chimera_graph(const ChimeraSpec& s) {
  if (s.rows < 1 || s.cols < 1 || s.shore < 1) {
    throw std::invalid_argument("chimera dimensions must be at least 1");
  }
  const std::size_t cells = s.rows * s.cols;
  if (cells / s.rows != s.cols || cells > std::numeric_limits<Vertex>::max() / (2 * s.shore)) {
    throw std::overflow_error("chimera vertex count overflows");
  }
  const std::size_t n = 2 * s.shore * cells;
  std::vector<Edge> edges;
  edges.reserve(chimera_edge_count(s));
  using enum Orientation;
  for (std::size_t i = 0; i < s.rows; ++i) {
    for (std::size_t j = 0; j < s.cols; ++j) {
      for (std::size_t a = 0; a < s.shore; ++a) {
        for (std::size_t b = 0; b < s.shore; ++b) {
          edges.push_back({chimera_index(s, i, j, kVertical, a), chimera_index(s, i, j, kHorizontal, b)});
        }
        if (i + 1 < s.rows) {
          edges.push_back({chimera_index(s, i, j, kVertical, a), chimera_index(s, i + 1, j, kVertical, a)});
        }
        if (j + 1 < s.cols) {
          edges.push_back({chimera_index(s, i, j, kHorizontal, a), chimera_index(s, i, j + 1, kHorizontal, a)});
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

/// Color of a qubit in the canonical proper 2-coloring of a Chimera graph.
inline int chimera_color(const ChimeraSpec& s, Vertex v) {
  const auto c = chimera_coord(s, v);
  const std::size_t base = c.row + c.col;
  return static_cast<int>((c.orientation == Orientation::kVertical ? base : base + 1) % 2);
}

/// Removes dead qubits and dead couplers. Survivors are re-indexed in
/// ascending order and keep their labels. Dead edges that are absent are ignored.
inline Graph apply_defects(const Graph& g, std::span<const Vertex> dead_vertices,
                           std::span<const Edge> dead_edges) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> dead(n, false);
  for (Vertex v : dead_vertices) {
    if (v >= n) throw std::out_of_range("dead vertex id out of range");
    dead[v] = true;
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    adj[u].assign(nb.begin(), nb.end());
  }
  for (const Edge& e : dead_edges) {
    if (e.u >= n || e.v >= n) throw std::out_of_range("dead edge endpoint out of range");
    std::erase(adj[e.u], e.v);
    std::erase(adj[e.v], e.u);
  }
  std::vector<Vertex> labels(g.labels().begin(), g.labels().end());
  const Graph pruned = Graph::from_adjacency(std::move(adj), std::move(labels));

  std::vector<Vertex> alive;
  for (Vertex v = 0; v < n; ++v) {
    if (!dead[v]) alive.push_back(v);
  }
  if (alive.empty()) throw std::invalid_argument("defects remove every vertex");
  return induced_subgraph(pruned, alive);
}

/// One contraction step: edge (u, v) merged into `merged` = min(u, v).
/// Ids refer to the input graph of contract_random_edges.
struct Contraction {
  Vertex u;
  Vertex v;
  Vertex merged;
};

struct ContractionRecord {
  std::vector<Contraction> steps;
};

struct ContractedGraph {
  Graph graph;
  ContractionRecord record;
};

/// Performs `count` contractions, each on an edge drawn uniformly from the
/// current edge set. The merged vertex is adjacent to N(u) | N(v) minus {u, v}.
inline ContractedGraph contract_random_edges(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (count >= n && n > 0) throw std::invalid_argument("too many contractions for graph size");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    adj[u].assign(nb.begin(), nb.end());
  }
  std::vector<bool> alive(n, true);
  std::size_t directed_edges = 2 * g.num_edges();
  Rng rng(seed);
  ContractionRecord record;
  record.steps.reserve(count);

  for (std::size_t step = 0; step < count; ++step) {
    if (directed_edges == 0) throw std::invalid_argument("no edge left to contract");
    // A uniform directed edge is a uniform undirected edge with a random side.
    std::uint64_t pick = rng.below(directed_edges);
    Vertex a = 0;
    while (pick >= adj[a].size()) {
      pick -= adj[a].size();
      ++a;
    }
    const Vertex b = adj[a][pick];
    const Vertex keep = std::min(a, b);
    const Vertex drop = std::max(a, b);

    // Every edge touching keep or drop goes away, the contracted edge once.
    directed_edges -= 2 * (adj[keep].size() + adj[drop].size() - 1);
    std::vector<Vertex> merged;
    std::set_union(adj[keep].begin(), adj[keep].end(), adj[drop].begin(), adj[drop].end(),
                   std::back_inserter(merged));
    std::erase(merged, keep);
    std::erase(merged, drop);
    for (Vertex w : adj[drop]) {
      if (w != keep) std::erase(adj[w], drop);
    }
    for (Vertex w : merged) {
      auto& aw = adj[w];
      auto it = std::lower_bound(aw.begin(), aw.end(), keep);
      if (it == aw.end() || *it != keep) aw.insert(it, keep);
    }
    adj[keep] = std::move(merged);
    adj[drop].clear();
    alive[drop] = false;
    directed_edges += 2 * adj[keep].size();
    record.steps.push_back({std::min(a, b), std::max(a, b), keep});
  }

  std::vector<Vertex> labels(g.labels().begin(), g.labels().end());
  const Graph contracted = Graph::from_adjacency(std::move(adj), std::move(labels));
  std::vector<Vertex> survivors;
  survivors.reserve(n - count);
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) survivors.push_back(v);
  }
  return {induced_subgraph(contracted, survivors), std::move(record)};
}

/// Largest complete graph embeddable on a square Chimera C(m, m, 4) with
/// `num_qubits` = 8 m^2 qubits: 1 + 4m, with m = sqrt(num_qubits / 8) taken
/// as a real and the result rounded, so doubling the qubits scales the
/// capacity by sqrt(2).
inline std::size_t clique_capacity(std::size_t num_qubits) {
  if (num_qubits < 8) throw std::invalid_argument("need at least one Chimera cell (8 qubits)");
  const double m = std::sqrt(static_cast<double>(num_qubits) / 8.0);
  return static_cast<std::size_t>(std::llround(1.0 + 4.0 * m));
}

}  // namespace cliquesplit

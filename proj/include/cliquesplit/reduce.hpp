#pragma once

#include <cstdint>
#include <vector>

#include "cliquesplit/graph.hpp"
#include "cliquesplit/rng.hpp"

namespace cliquesplit {

/// Vertices of the k-core of g (local ids, ascending). Linear-time peeling:
/// every vertex whose degree falls below k is queued once and removed.
inline std::vector<Vertex> k_core_vertices(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      removed[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--degree[w] < k) {
        removed[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

/// Maximal subgraph with minimum degree >= k. Possibly empty.
inline Graph k_core(const Graph& g, std::size_t k) {
  const auto core = k_core_vertices(g, k);
  if (core.size() == g.num_vertices()) return g;
  return induced_subgraph(g, core);
}

struct ReductionOutcome {
  Graph graph;
  std::size_t removed_vertices = 0;
  std::size_t removed_edges = 0;
};

enum class EdgePruning {
  kRandomVertex,  // prune around one uniformly drawn vertex
  kAllVertices,   // test every edge
};

/// k-core / edge-pruning reduction with k = lower_bound.
///
/// Keeps every clique with more than `lower_bound` vertices. An edge (v, n) is
/// dropped when v and n share fewer than lower_bound - 2 neighbors. All
/// common-neighbor counts are taken on the graph before any edge is dropped.
inline ReductionOutcome reduce_graph(const Graph& g, std::size_t lower_bound, std::uint64_t seed,
                                     EdgePruning pruning = EdgePruning::kRandomVertex) {
  ReductionOutcome out;
  Graph core = k_core(g, lower_bound);

  // A threshold of lower_bound - 2 <= 0 can never be undercut.
  if (lower_bound > 2 && !core.empty()) {
    const std::size_t threshold = lower_bound - 2;
    std::vector<Edge> doomed;
    auto test_vertex = [&](Vertex v) {
      for (Vertex w : core.neighbors(v)) {
        if (pruning == EdgePruning::kAllVertices && w < v) continue;
        const auto a = core.neighbors(v);
        const auto b = core.neighbors(w);
        std::size_t common = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end() && common < threshold) {
          if (*i < *j) {
            ++i;
          } else if (*j < *i) {
            ++j;
          } else {
            ++common;
            ++i;
            ++j;
          }
        }
        if (common < threshold) doomed.push_back({v, w});
      }
    };
    if (pruning == EdgePruning::kRandomVertex) {
      Rng rng(seed);
      test_vertex(static_cast<Vertex>(rng.below(core.num_vertices())));
    } else {
      for (Vertex v = 0; v < core.num_vertices(); ++v) test_vertex(v);
    }

    if (!doomed.empty()) {
      std::vector<std::vector<Vertex>> adj(core.num_vertices());
      for (Vertex v = 0; v < core.num_vertices(); ++v) {
        auto nb = core.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
      }
      for (const Edge& e : doomed) {
        std::erase(adj[e.u], e.v);
        std::erase(adj[e.v], e.u);
      }
      std::vector<Vertex> labels(core.labels().begin(), core.labels().end());
      core = k_core(Graph::from_adjacency(std::move(adj), std::move(labels)), lower_bound);
    }
  }

  out.removed_vertices = g.num_vertices() - core.num_vertices();
  out.removed_edges = g.num_edges() - core.num_edges();
  out.graph = std::move(core);
  return out;
}

}  // namespace cliquesplit

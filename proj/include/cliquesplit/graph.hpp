#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquesplit/errors.hpp"
#include "cliquesplit/rng.hpp"

namespace cliquesplit {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with sorted adjacency lists.
///
/// Every vertex carries a label: the id it had in the graph the caller
/// originally built. Induced subgraphs are re-indexed from zero but keep the
/// labels, so a clique found deep inside a decomposition maps straight back to
/// input vertices. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices with identity labels.
  explicit Graph(std::size_t n) : adj_(n), labels_(n) {
    std::iota(labels_.begin(), labels_.end(), Vertex{0});
  }

  /// Builds from an edge list. Duplicates collapse; self-loops and
  /// out-of-range endpoints throw. Empty `labels` means identity labels.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<Vertex> labels = {}) {
    Graph g(n);
    if (!labels.empty()) {
      if (labels.size() != n) {
        throw std::invalid_argument("label count does not match vertex count");
      }
      g.labels_ = std::move(labels);
    }
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw std::out_of_range("edge endpoint out of range");
      }
      if (e.u == e.v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
      }
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    g.finalize();
    return g;
  }

  /// Builds from adjacency lists that are already symmetric and loop-free.
  /// Lists are sorted and deduplicated here.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj,
                              std::vector<Vertex> labels) {
    Graph g;
    g.adj_ = std::move(adj);
    g.labels_ = std::move(labels);
    g.finalize();
    return g;
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  Vertex label(Vertex v) const { return labels_.at(v); }
  std::span<const Vertex> labels() const noexcept { return labels_; }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  /// Edges with u < v in ascending order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Walks the structure and throws std::logic_error on the first broken
  /// invariant (asymmetry, self-loop, range, duplicate labels).
  void validate() const {
    const std::size_t n = adj_.size();
    if (labels_.size() != n) throw std::logic_error("label count mismatch");
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
      const auto& a = adj_[u];
      degree_sum += a.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= n) throw std::logic_error("neighbor id out of range");
        if (a[i] == u) throw std::logic_error("self-loop");
        if (i > 0 && a[i - 1] >= a[i]) throw std::logic_error("adjacency not strictly sorted");
        if (!adjacent(a[i], u)) throw std::logic_error("adjacency not symmetric");
      }
    }
    if (degree_sum != 2 * num_edges_) throw std::logic_error("edge count mismatch");
    std::vector<Vertex> sorted(labels_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::logic_error("duplicate labels");
    }
  }

  /// Same vertex count and edge set; labels ignored.
  bool same_structure(const Graph& other) const { return adj_ == other.adj_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void finalize() {
    num_edges_ = 0;
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      num_edges_ += a.size();
    }
    num_edges_ /= 2;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> labels_;
  std::size_t num_edges_ = 0;
};

struct CliqueStats {
  std::size_t subproblems_solved = 0;  // solver calls
  std::size_t reductions = 0;          // k-core / edge-pruning passes
  std::size_t vertex_splits = 0;
  std::size_t partition_parts = 0;
  double solver_seconds = 0.0;         // wall time spent inside solver calls
};

/// A clique expressed in original (label) vertex ids.
struct CliqueResult {
  std::vector<Vertex> vertices;  // sorted labels
  std::string solver_name;
  CliqueStats stats;
  std::optional<double> energy;  // set by QUBO-based backends

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Maps local vertex ids of `g` to sorted labels.
inline std::vector<Vertex> to_labels(const Graph& g, std::span<const Vertex> local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff `labels` names distinct vertices of `g` that are pairwise adjacent.
inline bool is_clique(const Graph& g, std::span<const Vertex> labels) {
  std::unordered_map<Vertex, Vertex> index;
  index.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) index.emplace(g.label(v), v);
  std::vector<Vertex> local;
  local.reserve(labels.size());
  for (Vertex l : labels) {
    auto it = index.find(l);
    if (it == index.end()) return false;
    local.push_back(it->second);
  }
  for (std::size_t i = 0; i < local.size(); ++i) {
    for (std::size_t j = i + 1; j < local.size(); ++j) {
      if (!g.adjacent(local[i], local[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// DIMACS ASCII clique format

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_dimacs(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(line_no, "malformed problem line, expected 'p edge N M'");
      }
      n = detail::parse_count(tok[2], line_no);
      if (*n > UINT32_MAX) throw ParseError(line_no, "vertex count too large");
      edges.reserve(detail::parse_count(tok[3], line_no));
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e u v'");
      const auto u = detail::parse_count(tok[1], line_no);
      const auto v = detail::parse_count(tok[2], line_no);
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(line_no, "vertex id out of range [1, " + std::to_string(*n) + "]");
      }
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  return Graph::from_edges(*n, edges);
}

inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Constructions

inline Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    std::size_t k = 0;
    adj[u].reserve(n - 1 - nb.size());
    for (Vertex v = 0; v < n; ++v) {
      if (k < nb.size() && nb[k] == v) {
        ++k;
      } else if (v != u) {
        adj[u].push_back(v);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj), {g.labels().begin(), g.labels().end()});
}

/// Erdos-Renyi G(n, p): pairs (u, v), u < v, visited in lexicographic order,
/// one Bernoulli draw each.
inline Graph gnp_random(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

/// Binary words of the given length; two words adjacent iff their Hamming
/// distance is at least `min_distance`.
inline Graph hamming_graph(unsigned word_length, unsigned min_distance) {
  if (word_length < 1 || min_distance < 1) {
    throw std::invalid_argument("word length and distance must be at least 1");
  }
  if (word_length > 20) throw std::invalid_argument("word length above 20 rejected");
  const std::size_t n = std::size_t{1} << word_length;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && static_cast<unsigned>(std::popcount(u ^ v)) >= min_distance) {
        adj[u].push_back(v);
      }
    }
  }
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

/// Subgraph induced by `vertices` (local ids of g, any order, duplicates
/// ignored). New ids follow ascending order of the old ones; labels carry over.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kAbsent = UINT32_MAX;
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= n) throw std::out_of_range("vertex id out of range");

  std::vector<Vertex> remap(n, kAbsent);
  for (Vertex i = 0; i < keep.size(); ++i) remap[keep[i]] = i;

  std::vector<std::vector<Vertex>> adj(keep.size());
  std::vector<Vertex> labels(keep.size());
  for (Vertex i = 0; i < keep.size(); ++i) {
    labels[i] = g.label(keep[i]);
    for (Vertex w : g.neighbors(keep[i])) {
      if (remap[w] != kAbsent) adj[i].push_back(remap[w]);
    }
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::out_of_range("vertex id out of range");
  }
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// g with vertex v deleted.
inline Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
  std::vector<Vertex> rest;
  rest.reserve(g.num_vertices() - 1);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (u != v) rest.push_back(u);
  }
  return induced_subgraph(g, rest);
}

inline Graph neighborhood_subgraph(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("vertex id out of range");
  return induced_subgraph(g, g.neighbors(v));
}

}  // namespace cliquesplit

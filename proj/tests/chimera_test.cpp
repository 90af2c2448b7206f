#include <gtest/gtest.h>

#include <set>

#include "cliquesplit/chimera.hpp"
#include "oracle.hpp"

using namespace cliquesplit;

namespace {

// Counts Chimera couplers directly from coordinates, without the generator.
std::size_t enumerate_couplers(const ChimeraSpec& s) {
  const std::size_t n = 2 * s.shore * s.rows * s.cols;
  std::size_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto a = chimera_coord(s, u);
      const auto b = chimera_coord(s, v);
      const bool same_cell = a.row == b.row && a.col == b.col;
      if (same_cell && a.orientation != b.orientation) {
        ++count;
      } else if (a.orientation == b.orientation && a.k == b.k) {
        const bool vertical = a.orientation == Orientation::kVertical;
        if (vertical && a.col == b.col && a.row + 1 == b.row) ++count;
        if (!vertical && a.row == b.row && a.col + 1 == b.col) ++count;
      }
    }
  }
  return count;
}

bool properly_colored(const ChimeraSpec& s, const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (chimera_color(s, g.label(e.u)) == chimera_color(s, g.label(e.v))) return false;
  }
  return true;
}

}  // namespace

TEST(Chimera, FullSizeCounts) {
  const ChimeraSpec s{};
  auto g = chimera_graph(s);
  EXPECT_EQ(g.num_vertices(), 1152u);
  EXPECT_EQ(g.num_edges(), 3360u);
  EXPECT_EQ(chimera_edge_count(s), 3360u);
  EXPECT_TRUE(properly_colored(s, g));
  EXPECT_NO_THROW(g.validate());
}

TEST(Chimera, SingleCellIsK44) {
  const ChimeraSpec s{1, 1, 4};
  auto g = chimera_graph(s);
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_EQ(g.num_edges(), 16u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(Chimera, SmallGridByFormulaAndEnumeration) {
  const ChimeraSpec s{2, 2, 2};
  auto g = chimera_graph(s);
  EXPECT_EQ(g.num_vertices(), 16u);
  EXPECT_EQ(g.num_edges(), 24u);
  EXPECT_EQ(enumerate_couplers(s), 24u);
}

TEST(Chimera, EnumerationAgreesOnRectangles) {
  for (const ChimeraSpec s : {ChimeraSpec{3, 2, 4}, ChimeraSpec{1, 4, 3}, ChimeraSpec{4, 4, 1}}) {
    auto g = chimera_graph(s);
    EXPECT_EQ(g.num_edges(), enumerate_couplers(s));
    EXPECT_EQ(g.num_edges(), chimera_edge_count(s));
    EXPECT_TRUE(properly_colored(s, g));
  }
}

TEST(Chimera, IndexRoundTrip) {
  const ChimeraSpec s{3, 5, 4};
  for (Vertex v = 0; v < 2 * 4 * 15; ++v) {
    const auto c = chimera_coord(s, v);
    EXPECT_EQ(chimera_index(s, c.row, c.col, c.orientation, c.k), v);
  }
}

TEST(Chimera, RejectsZeroDimensions) {
  EXPECT_THROW(chimera_graph({0, 1, 4}), std::invalid_argument);
}

TEST(Defects, EmptySetsAreIdentity) {
  auto g = chimera_graph({2, 2, 4});
  EXPECT_EQ(apply_defects(g, {}, {}), g);
}

TEST(Defects, FiftySevenDeadQubits) {
  auto g = chimera_graph({});
  std::vector<Vertex> dead;
  for (Vertex v = 0; v < 57; ++v) dead.push_back(v * 20);
  auto h = apply_defects(g, dead, {});
  EXPECT_EQ(h.num_vertices(), 1095u);
  EXPECT_NO_THROW(h.validate());
}

TEST(Defects, RemovingOneCell) {
  const ChimeraSpec s{2, 2, 4};
  auto g = chimera_graph(s);
  std::vector<Vertex> cell;
  for (Vertex v = 0; v < 8; ++v) cell.push_back(v);
  auto h = apply_defects(g, cell, {});
  EXPECT_EQ(h.num_vertices(), 24u);
  // Three intact cells of 16 couplers, plus the two inter-cell lines that
  // avoid cell (0,0): (0,1)-(1,1) vertical and (1,0)-(1,1) horizontal.
  EXPECT_EQ(h.num_edges(), 3u * 16 + 2 * 4);
}

TEST(Defects, DeadCouplers) {
  auto g = chimera_graph({1, 1, 4});
  std::vector<Edge> dead{{0, 4}, {4, 0}, {1, 2}};
  auto h = apply_defects(g, {}, dead);
  EXPECT_EQ(h.num_edges(), 15u);
  std::vector<Vertex> all(8);
  std::iota(all.begin(), all.end(), Vertex{0});
  EXPECT_THROW(apply_defects(g, all, {}), std::invalid_argument);
}

TEST(Contraction, ZeroIsIdentity) {
  auto g = chimera_graph({2, 2, 4});
  auto c = contract_random_edges(g, 0, 1);
  EXPECT_EQ(c.graph, g);
  EXPECT_TRUE(c.record.steps.empty());
}

TEST(Contraction, FourCycleToTriangle) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto c = contract_random_edges(oracle::cycle(4), 1, seed);
    EXPECT_TRUE(c.graph.same_structure(oracle::complete(3)));
    ASSERT_EQ(c.record.steps.size(), 1u);
    const auto& step = c.record.steps[0];
    EXPECT_EQ(step.merged, std::min(step.u, step.v));
  }
}

TEST(Contraction, ChimeraMinusOneFiftyTwo) {
  auto c = contract_random_edges(chimera_graph({}), 152, 4);
  EXPECT_EQ(c.graph.num_vertices(), 1000u);
  EXPECT_NO_THROW(c.graph.validate());
}

TEST(Contraction, ReplayMatchesNeighborMergeRule) {
  auto g = gnp_random(30, 0.2, 5);
  auto c = contract_random_edges(g, 10, 9);
  // Replay the record on label sets and compare.
  std::vector<std::set<Vertex>> adj(30);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> alive(30, true);
  for (const auto& step : c.record.steps) {
    const Vertex keep = step.merged;
    const Vertex drop = step.u == keep ? step.v : step.u;
    ASSERT_TRUE(adj[keep].count(drop));
    for (Vertex w : adj[drop]) {
      adj[w].erase(drop);
      if (w != keep) {
        adj[w].insert(keep);
        adj[keep].insert(w);
      }
    }
    adj[keep].erase(drop);
    adj[drop].clear();
    alive[drop] = false;
  }
  std::size_t edges = 0;
  for (Vertex u = 0; u < 30; ++u) {
    if (alive[u]) edges += adj[u].size();
  }
  EXPECT_EQ(c.graph.num_edges(), edges / 2);
  for (const Edge& e : c.graph.edges()) {
    EXPECT_TRUE(adj[c.graph.label(e.u)].count(c.graph.label(e.v)));
  }
}

TEST(Contraction, Deterministic) {
  auto g = chimera_graph({4, 4, 4});
  EXPECT_EQ(contract_random_edges(g, 20, 3).graph, contract_random_edges(g, 20, 3).graph);
  EXPECT_THROW(contract_random_edges(g, 128, 3), std::invalid_argument);
}

TEST(Capacity, KnownValues) {
  EXPECT_EQ(clique_capacity(1152), 49u);
  EXPECT_EQ(clique_capacity(8), 5u);
  EXPECT_EQ(clique_capacity(2304), 69u);
  EXPECT_EQ(clique_capacity(4608), 97u);
  EXPECT_EQ(clique_capacity(9216), 137u);
  EXPECT_THROW(clique_capacity(7), std::invalid_argument);
}

TEST(Capacity, GrowsLikeSquareRoot) {
  for (std::size_t q = 8; q < 100000; q *= 2) {
    const double ratio = static_cast<double>(clique_capacity(4 * q) - 1) /
                         static_cast<double>(clique_capacity(q) - 1);
    EXPECT_NEAR(ratio, 2.0, 0.25);
  }
}

#include <gtest/gtest.h>

#include "cliquesplit/qubo.hpp"
#include "oracle.hpp"

using namespace cliquesplit;

namespace {

BinaryAssignment bits(std::string_view s) {
  BinaryAssignment x;
  for (char c : s) x.push_back(c == '1');
  return x;
}

BinaryAssignment from_mask(std::uint64_t mask, std::size_t n) {
  BinaryAssignment x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1U;
  return x;
}

// Plain enumeration in counting order, keeping the first strict minimum.
QuboMinimum enumerate_min(const Qubo& q) {
  const auto n = q.num_variables();
  QuboMinimum best{from_mask(0, n), evaluate(q, from_mask(0, n))};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto x = from_mask(mask, n);
    const double e = evaluate(q, x);
    if (e < best.energy) best = {x, e};
  }
  return best;
}

}  // namespace

TEST(Qubo, AccumulatesAndFoldsDiagonal) {
  Qubo q(3);
  q.add_linear(0, 1.5);
  q.add_quadratic(1, 1, 2.0);
  q.add_quadratic(2, 0, 3.0);
  q.add_quadratic(0, 2, -3.0);
  EXPECT_EQ(q.linear(0), 1.5);
  EXPECT_EQ(q.linear(1), 2.0);
  EXPECT_EQ(q.quadratic(0, 2), 0.0);
  EXPECT_TRUE(q.quadratic_terms().empty());
  EXPECT_THROW(q.add_linear(3, 1.0), std::out_of_range);
}

TEST(McQubo, TriangleHasNoPenalties) {
  auto q = mc_to_qubo(oracle::complete(3));
  EXPECT_TRUE(q.quadratic_terms().empty());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(q.linear(i), -1.0);
  auto m = brute_force_min(q);
  EXPECT_EQ(m.assignment, bits("111"));
  EXPECT_EQ(m.energy, -3.0);
}

TEST(McQubo, PathOfThree) {
  auto q = mc_to_qubo(oracle::path(3));
  ASSERT_EQ(q.quadratic_terms().size(), 1u);
  EXPECT_EQ(q.quadratic(0, 2), 2.0);
  auto m = brute_force_min(q);
  EXPECT_EQ(m.energy, -2.0);
  // Minimizers are 110 and 011; counting order with x0 least significant
  // reaches 110 (mask 3) before 011 (mask 6).
  EXPECT_EQ(m.assignment, bits("110"));
}

TEST(McQubo, EdgelessGraph) {
  auto q = mc_to_qubo(Graph(5));
  EXPECT_EQ(q.quadratic_terms().size(), 10u);
  EXPECT_EQ(brute_force_min(q).energy, -1.0);
}

TEST(McQubo, Validation) {
  EXPECT_THROW(mc_to_qubo(Graph{}), std::invalid_argument);
  EXPECT_THROW(mc_to_qubo(oracle::path(3), {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(mc_to_qubo(oracle::path(3), {0.0, 2.0}), std::invalid_argument);
}

TEST(McQubo, PenaltyCountMatchesComplementEdges) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gnp_random(15, 0.4, seed);
    auto q = mc_to_qubo(g, {1.0, 3.0});
    EXPECT_EQ(q.quadratic_terms().size(), complement(g).num_edges());
    for (const auto& [ij, a] : q.quadratic_terms()) {
      EXPECT_FALSE(g.adjacent(static_cast<Vertex>(ij.first), static_cast<Vertex>(ij.second)));
      EXPECT_EQ(a, 3.0);
    }
  }
}

TEST(Evaluate, HandValues) {
  auto k3 = mc_to_qubo(oracle::complete(3));
  auto p3 = mc_to_qubo(oracle::path(3));
  EXPECT_EQ(evaluate(k3, bits("000")), 0.0);
  EXPECT_EQ(evaluate(k3, bits("111")), -3.0);
  EXPECT_EQ(evaluate(p3, bits("101")), 0.0);
  EXPECT_THROW(evaluate(p3, bits("10")), std::invalid_argument);
}

TEST(Evaluate, CliqueEnergyIsMinusSize) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gnp_random(12, 0.5, seed);
    auto q = mc_to_qubo(g);
    for (std::uint64_t mask = 0; mask < 4096; mask += 37) {
      auto x = from_mask(mask, 12);
      std::size_t selected = 0, missing = 0;
      for (Vertex i = 0; i < 12; ++i) {
        selected += x[i];
        for (Vertex j = i + 1; j < 12; ++j) missing += x[i] && x[j] && !g.adjacent(i, j);
      }
      EXPECT_EQ(evaluate(q, x), -static_cast<double>(selected) + 2.0 * static_cast<double>(missing));
    }
  }
}

TEST(BruteForce, ZeroQubo) {
  auto m = brute_force_min(Qubo(3));
  EXPECT_EQ(m.assignment, bits("000"));
  EXPECT_EQ(m.energy, 0.0);
}

TEST(BruteForce, AgreesWithEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    Qubo q(n);
    for (std::size_t i = 0; i < n; ++i) {
      q.add_linear(i, static_cast<double>(rng.below(7)) - 3.0);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.bernoulli(0.5)) q.add_quadratic(i, j, static_cast<double>(rng.below(9)) - 4.0);
      }
    }
    auto a = brute_force_min(q);
    auto b = enumerate_min(q);
    EXPECT_EQ(a.energy, b.energy);
    EXPECT_EQ(a.assignment, b.assignment);
  }
  EXPECT_THROW(brute_force_min(Qubo(25)), std::invalid_argument);
}

TEST(BruteForce, MinimumIsMinusOmega) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gnp_random(4 + seed % 10, 0.5, seed);
    auto m = brute_force_min(mc_to_qubo(g));
    EXPECT_EQ(m.energy, -static_cast<double>(oracle::brute_force_omega(g)));
    ASSERT_TRUE(std::holds_alternative<CliqueResult>(assignment_to_clique(g, m.assignment)));
  }
}

TEST(Ising, SingleVariable) {
  Qubo q(1);
  q.add_linear(0, -1.0);
  auto m = qubo_to_ising(q);
  EXPECT_EQ(m.h[0], -0.5);
  EXPECT_EQ(m.offset, -0.5);
  EXPECT_EQ(m.energy({1}), -1.0);
  EXPECT_EQ(m.energy({-1}), 0.0);
}

TEST(Ising, ZeroQubo) {
  auto m = qubo_to_ising(Qubo(4));
  EXPECT_EQ(m.h, std::vector<double>(4, 0.0));
  EXPECT_TRUE(m.couplings.empty());
  EXPECT_EQ(m.offset, 0.0);
}

TEST(Ising, EnergiesAgreeOnEveryAssignment) {
  auto p3 = mc_to_qubo(oracle::path(3));
  auto m = qubo_to_ising(p3);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    auto x = from_mask(mask, 3);
    EXPECT_EQ(m.energy(to_spins(x)), evaluate(p3, x));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto q = mc_to_qubo(gnp_random(8, 0.4, seed), {1.0, 2.5});
    auto im = qubo_to_ising(q);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      auto x = from_mask(mask, 8);
      EXPECT_NEAR(im.energy(to_spins(x)), evaluate(q, x), 1e-12);
    }
  }
}

TEST(Decode, Outcomes) {
  auto k3 = oracle::complete(3);
  auto ok = assignment_to_clique(k3, bits("111"));
  ASSERT_TRUE(std::holds_alternative<CliqueResult>(ok));
  EXPECT_EQ(std::get<CliqueResult>(ok).vertices, (std::vector<Vertex>{0, 1, 2}));
  auto bad = assignment_to_clique(oracle::path(3), bits("101"));
  ASSERT_TRUE(std::holds_alternative<Violations>(bad));
  EXPECT_EQ(std::get<Violations>(bad), (Violations{{0, 2}}));
}

TEST(Decode, AtMostOneBitIsAlwaysAClique) {
  auto g = Graph(4);
  for (auto s : {"0000", "1000", "0100", "0010", "0001"}) {
    auto r = assignment_to_clique(g, bits(s));
    ASSERT_TRUE(std::holds_alternative<CliqueResult>(r));
    EXPECT_LE(std::get<CliqueResult>(r).size(), 1u);
  }
}

TEST(Decode, ReportsLabels) {
  std::vector<Vertex> pick{2, 5, 7};
  auto sub = induced_subgraph(oracle::path(8), pick);
  auto r = assignment_to_clique(sub, bits("101"));
  ASSERT_TRUE(std::holds_alternative<Violations>(r));
  EXPECT_EQ(std::get<Violations>(r), (Violations{{2, 7}}));
}

TEST(QuboText, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto q = mc_to_qubo(gnp_random(12, 0.3, seed), {0.1, 0.7});
    EXPECT_EQ(parse_qubo(write_qubo(q)), q);
  }
  auto text = write_qubo(mc_to_qubo(oracle::path(3)));
  EXPECT_EQ(text, "N 3\nL 0 -1\nL 1 -1\nL 2 -1\nQ 0 2 2\n");
}

TEST(QuboText, Errors) {
  EXPECT_THROW(parse_qubo("L 0 1\n"), ParseError);
  EXPECT_THROW(parse_qubo("N 2\nL 2 1\n"), ParseError);
  EXPECT_THROW(parse_qubo("N 2\nQ 0 1 x\n"), ParseError);
  EXPECT_THROW(parse_qubo("N 2\nZ 0 1\n"), ParseError);
  EXPECT_THROW(parse_qubo("# nothing\n"), ParseError);
  EXPECT_EQ(parse_qubo("# c\nN 2\nQ 0 0 4\n").linear(0), 4.0);
}

#include <gtest/gtest.h>

#include "cliquesplit/solvers.hpp"
#include "oracle.hpp"

using namespace cliquesplit;

namespace {

Graph petersen() {
  return oracle::make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Qubo single_variable(double a) {
  Qubo q(1);
  q.add_linear(0, a);
  return q;
}

BinaryAssignment bits(std::string_view s) {
  BinaryAssignment x;
  for (char c : s) x.push_back(c == '1');
  return x;
}

struct ConstantSampler {
  BinaryAssignment value;
  SampleSet sample(const Qubo& q, std::size_t num_reads, std::uint64_t) const {
    return SampleSet::from_assignments(q, std::vector<BinaryAssignment>(num_reads, value));
  }
};

struct SilentSampler {
  SampleSet sample(const Qubo&, std::size_t, std::uint64_t) const { return {}; }
};

static_assert(QuboSampler<MockSampler>);
static_assert(QuboSampler<ConstantSampler>);
static_assert(!QuboSampler<int>);

}  // namespace

TEST(Greedy, ProducesMaximalClique) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gnp_random(40, 0.4, seed);
    auto c = greedy_clique(g);
    ASSERT_TRUE(is_clique(g, c));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      bool extends = true;
      for (Vertex u : c) extends = extends && g.adjacent(u, v);
      EXPECT_FALSE(extends) << "clique not maximal at seed " << seed;
    }
  }
  EXPECT_TRUE(greedy_clique(Graph{}).empty());
}

TEST(Exact, SmallGraphs) {
  EXPECT_EQ(exact_max_clique(oracle::complete(5)).size(), 5u);
  EXPECT_EQ(exact_max_clique(petersen()).size(), 2u);
  EXPECT_EQ(exact_max_clique(Graph(4)).size(), 1u);
  EXPECT_EQ(exact_max_clique(Graph{}).size(), 0u);
  EXPECT_EQ(oracle::brute_force_omega(petersen()), 2u);
}

TEST(Exact, MatchesOracles) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 18;
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 9);
    auto g = gnp_random(n, p, seed);
    auto r = exact_max_clique(g);
    ASSERT_TRUE(is_clique(g, r.vertices));
    ASSERT_EQ(r.size(), oracle::brute_force_omega(g)) << "seed " << seed;
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gnp_random(70, 0.5, seed);
    ASSERT_EQ(exact_max_clique(g).size(), oracle::omega(g));
  }
}

TEST(Exact, LabelsSurviveSubgraphs) {
  auto g = gnp_random(40, 0.6, 3);
  std::vector<Vertex> pick;
  for (Vertex v = 0; v < 40; v += 2) pick.push_back(v);
  auto sub = induced_subgraph(g, pick);
  auto r = exact_max_clique(sub);
  EXPECT_TRUE(is_clique(g, r.vertices));
  for (Vertex v : r.vertices) EXPECT_EQ(v % 2, 0u);
}

TEST(Exact, BudgetCarriesIncumbent) {
  auto g = gnp_random(150, 0.7, 1);
  try {
    exact_max_clique(g, 5);
    FAIL() << "budget should run out";
  } catch (const BudgetExhausted& e) {
    EXPECT_TRUE(is_clique(g, e.best().vertices));
    EXPECT_GT(e.best().size(), 0u);
  }
}

TEST(SaClique, CompleteGraphSucceedsImmediately) {
  SolverConfig cfg;
  cfg.budget = 1;
  auto r = sa_clique(oracle::complete(5), 5, cfg);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size(), 5u);
}

TEST(SaClique, SizeBounds) {
  EXPECT_THROW(sa_clique(oracle::complete(3), 4, {}), std::invalid_argument);
  EXPECT_THROW(sa_clique(oracle::complete(3), 0, {}), std::invalid_argument);
  SolverConfig bad;
  bad.alpha = 1.0;
  EXPECT_THROW(sa_clique(oracle::complete(3), 2, bad), std::invalid_argument);
}

TEST(SaClique, NeverReturnsANonClique) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gnp_random(30, 0.5, seed);
    const auto omega = oracle::omega(g);
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.budget = 20000;
    auto hit = sa_clique(g, omega, cfg);
    if (hit) {
      EXPECT_EQ(hit->size(), omega);
      EXPECT_TRUE(is_clique(g, hit->vertices));
    }
    EXPECT_FALSE(sa_clique(g, omega + 1, cfg));
  }
}

TEST(SaClique, Deterministic) {
  auto g = gnp_random(45, 0.5, 2);
  SolverConfig cfg;
  cfg.seed = 5;
  auto a = sa_clique(g, 7, cfg);
  auto b = sa_clique(g, 7, cfg);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) EXPECT_EQ(a->vertices, b->vertices);
}

TEST(SaClique, DenseGraphsMatchOracle) {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gnp_random(45, 0.9, seed);
    SolverConfig cfg;
    cfg.seed = seed;
    hits += solve_mc(g, "sa-clique", cfg).size() == exact_max_clique(g).size();
  }
  EXPECT_GE(hits, 19u);
}

TEST(BinarySearch, CompleteGraph) {
  auto g = oracle::complete(8);
  std::size_t calls = 0;
  auto omega = binary_search_max_clique(g, [&](std::size_t m) {
    ++calls;
    return m <= exact_max_clique(g).size();
  });
  EXPECT_EQ(omega, 8u);
  EXPECT_LE(calls, 4u);
}

TEST(BinarySearch, EdgelessGraph) {
  auto g = Graph(6);
  EXPECT_EQ(binary_search_max_clique(g, [](std::size_t m) { return m <= 1; }), 1u);
}

TEST(BinarySearch, FindsThresholdWithLogCalls) {
  for (std::size_t upper = 1; upper < 200; upper += 7) {
    for (std::size_t target = 0; target <= upper; target += 3) {
      std::size_t calls = 0;
      auto got = binary_search_max_clique(upper, [&](std::size_t m) {
        ++calls;
        return m <= target;
      });
      EXPECT_EQ(got, target);
      EXPECT_LE(calls, 2 + static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(upper) + 1))));
    }
  }
}

TEST(BinarySearch, DetectsNonMonotonePredicate) {
  EXPECT_THROW(binary_search_max_clique(10, [](std::size_t m) { return m == 10; }), std::logic_error);
}

TEST(SaQubo, SingleVariable) {
  auto r = sa_qubo(single_variable(-1.0), {});
  EXPECT_EQ(r.assignment, bits("1"));
  EXPECT_EQ(r.energy, -1.0);
}

TEST(SaQubo, PathOfThreeAlmostAlways) {
  auto q = mc_to_qubo(oracle::path(3));
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    hits += sa_qubo(q, cfg).energy == -2.0;
  }
  EXPECT_GE(hits, 99u);
}

TEST(SaQubo, Triangle) {
  EXPECT_EQ(sa_qubo(mc_to_qubo(oracle::complete(3)), {}).energy, -3.0);
}

TEST(SaQubo, ReportedEnergyIsExact) {
  auto q = mc_to_qubo(gnp_random(15, 0.5, 1), {0.3, 0.7});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.budget = 500;
    auto r = sa_qubo(q, cfg);
    EXPECT_EQ(r.energy, evaluate(q, r.assignment));
  }
}

TEST(Descent, LocalMinimumIsFixed) {
  auto q = mc_to_qubo(oracle::path(3));
  auto r = local_search_descent(q, bits("110"));
  EXPECT_EQ(r.assignment, bits("110"));
  EXPECT_THROW(local_search_descent(q, bits("11")), std::invalid_argument);
}

TEST(Descent, TriangleFromZero) {
  auto r = local_search_descent(mc_to_qubo(oracle::complete(3)), bits("000"));
  EXPECT_EQ(r.assignment, bits("111"));
  EXPECT_EQ(r.energy, -3.0);
}

TEST(Descent, EveryStartOnPathReachesOptimum) {
  auto q = mc_to_qubo(oracle::path(3));
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    BinaryAssignment x{static_cast<std::uint8_t>(mask & 1), static_cast<std::uint8_t>(mask >> 1 & 1),
                       static_cast<std::uint8_t>(mask >> 2 & 1)};
    EXPECT_EQ(local_search_descent(q, x).energy, -2.0) << mask;
  }
}

TEST(Descent, ResultIsOneFlipMinimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto q = mc_to_qubo(gnp_random(20, 0.4, seed));
    Rng rng(seed);
    BinaryAssignment x(20);
    for (auto& b : x) b = rng.bernoulli(0.5);
    auto r = local_search_descent(q, x);
    for (std::size_t i = 0; i < 20; ++i) {
      auto y = r.assignment;
      y[i] ^= 1;
      EXPECT_GE(evaluate(q, y), r.energy);
    }
  }
}

TEST(Sampler, ConstantSamplerIsPolished) {
  auto q = mc_to_qubo(oracle::complete(3));
  ConstantSampler sampler{bits("000")};
  SolverConfig cfg;
  cfg.num_reads = 3;
  EXPECT_EQ(sampler_solve(q, sampler, cfg).energy, -3.0);
}

TEST(Sampler, MockSamplerFindsOptimum) {
  auto q = mc_to_qubo(oracle::path(3));
  MockSampler sampler;
  SolverConfig cfg;
  cfg.num_reads = 500;
  EXPECT_EQ(sampler_solve(q, sampler, cfg).energy, -2.0);
}

TEST(Sampler, Errors) {
  auto q = mc_to_qubo(oracle::path(3));
  MockSampler sampler;
  SolverConfig cfg;
  cfg.num_reads = 0;
  EXPECT_THROW(sampler_solve(q, sampler, cfg), std::invalid_argument);
  SilentSampler silent;
  cfg.num_reads = 2;
  EXPECT_THROW(sampler_solve(q, silent, cfg), Error);
}

TEST(Sampler, SampleSetSortedByEnergy) {
  auto q = mc_to_qubo(oracle::path(3));
  auto set = SampleSet::from_assignments(q, {bits("101"), bits("110"), bits("000"), bits("010")});
  ASSERT_EQ(set.samples.size(), 4u);
  EXPECT_EQ(set.samples[0].energy, -2.0);
  EXPECT_EQ(set.samples[1].energy, -1.0);
  EXPECT_EQ(set.samples[2].assignment, bits("101"));
  EXPECT_EQ(set.samples[3].assignment, bits("000"));
}

TEST(Repair, DropsConflictsUntilClique) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gnp_random(20, 0.5, seed);
    std::vector<Vertex> all(20);
    std::iota(all.begin(), all.end(), Vertex{0});
    auto c = repair_clique(g, all);
    EXPECT_TRUE(is_clique(g, to_labels(g, c)));
    EXPECT_FALSE(c.empty());
  }
}

TEST(SolveMc, Facade) {
  EXPECT_EQ(solve_mc(oracle::complete(5), "exact", {}).size(), 5u);
  EXPECT_EQ(solve_mc(oracle::complete(3), "sa-qubo", {}).size(), 3u);
  EXPECT_EQ(solve_mc(Graph(4), "sa-clique", {}).size(), 1u);
  EXPECT_EQ(solve_mc(Graph{}, "descent", {}).size(), 0u);
  EXPECT_THROW(solve_mc(oracle::complete(3), "no-such-solver", {}), std::invalid_argument);
}

TEST(SolveMc, EveryBackendReturnsAClique) {
  for (const auto& name : solver_names()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto g = gnp_random(18, 0.5, seed);
      SolverConfig cfg;
      cfg.seed = seed;
      cfg.num_reads = 10;
      auto r = solve_mc(g, name, cfg);
      EXPECT_TRUE(is_clique(g, r.vertices)) << name;
      EXPECT_GE(r.size(), 1u);
      EXPECT_LE(r.size(), oracle::omega(g));
      EXPECT_EQ(r.solver_name, name);
      if (name != "exact" && name != "sa-clique") {
        EXPECT_TRUE(r.energy.has_value());
      }
    }
  }
}

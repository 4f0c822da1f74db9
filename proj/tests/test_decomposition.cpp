#include <gtest/gtest.h>

#include <random>

#include "judicious/decomposition.hpp"
#include "judicious/generators.hpp"
#include "judicious/oracle.hpp"
#include "support/invariants.hpp"

using namespace judicious;

namespace {

UnderlyingGraph random_graph(Vertex n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.push_back({u, v});
  return UnderlyingGraph::from_pairs(n, pairs);
}

UnderlyingGraph triangle() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return UnderlyingGraph::from_pairs(3, e);
}

std::vector<Vertex> all_vertices(Vertex n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TEST(Matching, AgreesWithExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto n = static_cast<Vertex>(2 + seed % 11);
    const UnderlyingGraph g = random_graph(n, 0.1 + 0.05 * static_cast<double>(seed % 8), seed);
    const Matching m = maximum_matching(g);
    ASSERT_TRUE(m.valid_in(g));
    ASSERT_EQ(m.size(), exact_max_matching(g)) << "seed " << seed;
  }
}

TEST(Matching, OddCycleNeedsBlossom) {
  // 5-cycle with a pendant: maximum matching 3 requires shrinking.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}};
  EXPECT_EQ(maximum_matching(UnderlyingGraph::from_pairs(6, e)).size(), 3);
}

TEST(FreeVertices, Definition) {
  // Path 0-1-2 matched on {1,2}: 0 sees 1 but not 2, so 0 is free.
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const UnderlyingGraph g = UnderlyingGraph::from_pairs(3, path);
  Matching m(3);
  m.match(1, 2);
  EXPECT_TRUE(is_free(g, m, 0));
  // In a triangle the unmatched vertex sees both ends.
  Matching t(3);
  t.match(0, 1);
  EXPECT_FALSE(is_free(triangle(), t, 2));
}

TEST(Tight, TriangleIsTight) {
  const UnderlyingGraph g = triangle();
  EXPECT_TRUE(brute_force_tight_check(g));
  const Matching m = maximize_free_vertices(g, maximum_matching(g));
  const TightReport r = tight_components(g, m);
  ASSERT_EQ(r.components.size(), 1U);
  EXPECT_EQ(r.components[0].vertices.size(), 3U);
}

TEST(Tight, BijectionWithNonFreeVertices) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto n = static_cast<Vertex>(3 + seed % 16);
    const UnderlyingGraph g = random_graph(n, 0.08 + 0.04 * static_cast<double>(seed % 6), seed);
    const Matching m = maximize_free_vertices(g, maximum_matching(g));
    ASSERT_EQ(m.size(), maximum_matching(g).size());
    std::int64_t non_free = 0;
    for (Vertex w : m.unmatched()) non_free += is_free(g, m, w) ? 0 : 1;
    const TightReport r = tight_components(g, m);
    ASSERT_EQ(static_cast<std::int64_t>(r.components.size()), non_free) << "seed " << seed;
    for (const TightComponent& c : r.components) {
      if (c.vertices.size() > 9) continue;
      ASSERT_TRUE(brute_force_tight_check(induced(g, c.vertices).graph)) << "seed " << seed;
    }
  }
}

TEST(Tight, RejectsNonMaximumMatching) {
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
  const UnderlyingGraph g = UnderlyingGraph::from_pairs(4, path);
  Matching m(4);
  m.match(1, 2);
  EXPECT_THROW(maximize_free_vertices(g, m), InputError);
}

TEST(Tight, BruteForceRejectsNonTight) {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_FALSE(brute_force_tight_check(UnderlyingGraph::from_pairs(3, path)));
  EXPECT_THROW(brute_force_tight_check(UnderlyingGraph::from_pairs(10, {})), InputError);
}

TEST(Stars, InvariantsOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto n = static_cast<std::int32_t>(10 + seed * 3);
    const Digraph g = random_min_outdeg(n, 2 + static_cast<std::int32_t>(seed % 2), 0.3, seed);
    for (bool anti : {false, true}) {
      const StarDecomposition dec =
          star_decompose(g, all_vertices(g.vertex_count()), default_degree_cap(g, 0.1), anti);
      ASSERT_EQ(checks::check_star_decomposition(g, dec, 0.1), "") << "seed " << seed;
    }
  }
}

TEST(Stars, AntiparallelTriangleIsSeededOnThePair) {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}, {2, 0}};
  const Digraph g = Digraph::from_edge_list(3, e);
  const StarDecomposition plain = star_decompose(g, all_vertices(3), 100.0, false);
  const StarDecomposition seeded = star_decompose(g, all_vertices(3), 100.0, true);
  EXPECT_EQ(plain.sigma, 1);
  EXPECT_EQ(plain.tau_prime, 0);
  ASSERT_EQ(seeded.stars.size(), 1U);
  const Edge s = seeded.stars[0].seed;
  EXPECT_TRUE(g.has_edge(s.tail, s.head) && g.has_edge(s.head, s.tail));
  EXPECT_EQ(checks::check_star_decomposition(g, seeded, 0.1), "");
}

TEST(Stars, SubsetAndEmpty) {
  const Digraph g = random_min_outdeg(40, 2, 0.5, 9);
  const std::vector<Vertex> subset{1, 3, 5, 7, 9, 11, 13, 20, 21, 22, 23};
  const double cap = 2.0 * static_cast<double>(g.edge_count()) / 11.0 / 0.2;
  const StarDecomposition dec = star_decompose(g, subset, cap, true);
  EXPECT_EQ(checks::check_star_decomposition(g, dec, 0.2), "");
  EXPECT_TRUE(star_decompose(g, {}, cap, false).stars.empty());
}

TEST(Stars, HeavyUnmatchedVerticesGoToLeftover) {
  // Star centred at 0 with leaves 1..5: one edge matched, four leaves free.
  std::vector<Edge> e;
  for (Vertex v = 1; v <= 5; ++v) e.push_back({0, v});
  const Digraph g = Digraph::from_edge_list(6, e);
  const StarDecomposition loose = star_decompose(g, all_vertices(6), 100.0, false);
  EXPECT_EQ(loose.stars.size(), 1U);
  EXPECT_TRUE(loose.leftover.empty());
  const StarDecomposition tight = star_decompose(g, all_vertices(6), 0.5, false);
  EXPECT_EQ(tight.leftover.size(), 4U);
}

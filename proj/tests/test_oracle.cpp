#include <gtest/gtest.h>

#include <random>

#include "judicious/generators.hpp"
#include "judicious/oracle.hpp"

using namespace judicious;

namespace {

Digraph cycle3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}};
  return Digraph::from_edge_list(3, e);
}

Digraph relabel(const Digraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({perm[x.tail], perm[x.head]});
  return Digraph::from_edge_list(g.vertex_count(), e);
}

Digraph reversed(const Digraph& g) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.push_back({x.head, x.tail});
  return Digraph::from_edge_list(g.vertex_count(), e);
}

}  // namespace

TEST(Oracle, DirectedTriangle) {
  const OracleResult r = exact_judicious(cycle3());
  EXPECT_EQ(r.optimum, 1);
  EXPECT_EQ(r.evaluated, 4U);
  EXPECT_EQ(cut_stats(cycle3(), r.witness).min_cut(), 1);
}

TEST(Oracle, WitnessAchievesOptimum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph g = random_min_outdeg(12, 2, 0.5, seed);
    const OracleResult r = exact_judicious(g);
    EXPECT_EQ(cut_stats(g, r.witness).min_cut(), r.optimum);
    EXPECT_EQ(r.evaluated, 1U << 11);
  }
}

TEST(Oracle, InvariantUnderRelabellingAndReversal) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Digraph g = random_min_outdeg(11, 2, 1.0, seed);
    std::vector<Vertex> perm(11);
    for (Vertex v = 0; v < 11; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::int64_t opt = exact_judicious(g).optimum;
    EXPECT_EQ(exact_judicious(relabel(g, perm)).optimum, opt);
    EXPECT_EQ(exact_judicious(reversed(g)).optimum, opt);
  }
}

TEST(Oracle, ThreadCountDoesNotChangeResult) {
  const Digraph g = random_min_outdeg(16, 3, 0.5, 3);
  const OracleResult one = exact_judicious(g, 1);
  const OracleResult four = exact_judicious(g, 4);
  EXPECT_EQ(one.optimum, four.optimum);
  EXPECT_EQ(one.witness, four.witness);
}

TEST(Oracle, D1GadgetAtMostOne) {
  for (std::int32_t n = 4; n <= 10; ++n) EXPECT_LE(exact_judicious(d1_gadget(n)).optimum, 1);
}

TEST(Oracle, LowerBoundGadgetForwardCap) {
  const LowerBoundGadget g = lower_bound_gadget(2, 1);
  EXPECT_EQ(exact_max_forward_cut(g.graph, g.hub), 4);
}

TEST(Oracle, MinGap) {
  const std::vector<std::int64_t> a{4, 3, 3, 2};
  EXPECT_EQ(exact_min_gap(a), 0);
  const std::vector<std::int64_t> b{10, 1};
  EXPECT_EQ(exact_min_gap(b), 9);
  EXPECT_EQ(exact_min_gap({}), 0);
}

TEST(Oracle, MatchingAndPerfectMatchings) {
  std::vector<Edge> k4;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.push_back({u, v});
  EXPECT_EQ(exact_max_matching(UnderlyingGraph::from_pairs(4, k4)), 2);
  EXPECT_EQ(enumerate_perfect_matchings(UnderlyingGraph::from_pairs(4, k4)).size(), 3U);
  const std::vector<Edge> edge{{0, 1}};
  EXPECT_EQ(enumerate_perfect_matchings(UnderlyingGraph::from_pairs(2, edge)).size(), 1U);
  EXPECT_TRUE(enumerate_perfect_matchings(UnderlyingGraph::from_pairs(3, edge)).empty());
}

TEST(Oracle, SizeCaps) {
  EXPECT_THROW(exact_judicious(random_min_outdeg(25, 2, 0, 1)), InputError);
  EXPECT_THROW(exact_min_gap(std::vector<std::int64_t>(16, 1)), InputError);
  EXPECT_THROW(exact_max_matching(UnderlyingGraph::from_pairs(13, {})), InputError);
  EXPECT_THROW(enumerate_perfect_matchings(UnderlyingGraph::from_pairs(11, {})), InputError);
}

#include <gtest/gtest.h>

#include "judicious/generators.hpp"
#include "judicious/samplers.hpp"

using namespace judicious;

namespace {

std::vector<Vertex> all_vertices(Vertex n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TEST(Expectation, HandComputed) {
  // 0 -> 1 with 0 fixed on side 1: e12 = P(1 lands on side 2) = 1 - p.
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  const Digraph g = Digraph::from_edge_list(3, e);
  const ExpectedCuts c = expected_cuts(g, {{0}, {}}, {2, 5});
  // e(0,1): (3/5); e(1,2) free-free: p(1-p) = 6/25.
  EXPECT_DOUBLE_EQ(c.e12, 3.0 / 5.0 + 6.0 / 25.0);
  EXPECT_DOUBLE_EQ(c.e21, 6.0 / 25.0);
}

TEST(Expectation, HalfOnFreeGraphIsQuarter) {
  const Digraph g = random_min_outdeg(50, 2, 1.0, 1);
  const ExpectedCuts c = expected_cuts(g, {}, {1, 2});
  EXPECT_DOUBLE_EQ(c.e12, static_cast<double>(g.edge_count()) / 4.0);
  EXPECT_DOUBLE_EQ(c.e21, c.e12);
}

TEST(SplitCounts, RejectsOverlap) {
  const Digraph g = random_min_outdeg(10, 2, 0, 1);
  EXPECT_THROW(split_counts(g, {{1, 2}, {2}}), InputError);
  EXPECT_THROW(split_counts(g, {{11}, {}}), InputError);
  EXPECT_THROW(expected_cuts(g, {}, {3, 2}), InputError);
}

TEST(SecondMoment, AcceptsAndRespectsFixedSides) {
  const Digraph g = random_min_outdeg(400, 2, 1.0, 3);
  SamplerConfig config;
  config.epsilon = 0.05;
  config.seed = 7;
  const SampleOutcome out = second_moment_partition(g, {{0, 1}, {2}}, config);
  EXPECT_TRUE(out.accepted);
  EXPECT_EQ(out.stats, cut_stats(g, out.partition));
  EXPECT_GE(static_cast<double>(out.stats.e12), out.target12);
  EXPECT_GE(static_cast<double>(out.stats.e21), out.target21);
  EXPECT_TRUE(out.partition.on_first(0));
  EXPECT_TRUE(out.partition.on_first(1));
  EXPECT_FALSE(out.partition.on_first(2));
}

TEST(SecondMoment, DeterministicPerSeed) {
  const Digraph g = random_min_outdeg(200, 3, 0.5, 4);
  SamplerConfig config;
  config.seed = 11;
  const SampleOutcome a = second_moment_partition(g, {}, config);
  const SampleOutcome b = second_moment_partition(g, {}, config);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.attempts_used, b.attempts_used);
}

TEST(SecondMoment, ImpossibleTargetReturnsBestSeen) {
  const Digraph g = random_min_outdeg(30, 2, 0, 5);
  SamplerConfig config;
  config.epsilon = 1e-9;
  config.max_attempts = 5;
  config.p = {0, 1};  // nothing can land on side 1
  const SampleOutcome out = second_moment_partition(g, {}, config);
  EXPECT_EQ(out.attempts_used, out.accepted ? out.attempts_used : 5);
  EXPECT_EQ(out.stats.min_cut(), 0);
}

TEST(SecondMoment, NoFreeVerticesSingleAttempt) {
  const std::vector<Edge> e{{0, 1}, {1, 0}};
  const Digraph g = Digraph::from_edge_list(2, e);
  const SampleOutcome out = second_moment_partition(g, {{0}, {1}}, {});
  EXPECT_EQ(out.attempts_used, 1);
  EXPECT_EQ(out.stats, (CutStats{1, 1}));
}

TEST(Quarter, DenseInstance) {
  const Digraph g = random_min_outdeg(400, 380, 0, 2);
  const SampleOutcome out = quarter_partition(g, 0.15, 3);
  EXPECT_TRUE(out.precondition_met);
  EXPECT_TRUE(out.accepted);
  EXPECT_GE(static_cast<double>(out.stats.min_cut()), (0.25 - 0.15) * g.edge_count());
}

TEST(StarBisection, LeavesOppositeApex) {
  const Digraph g = random_min_outdeg(300, 2, 0.2, 8);
  const StarDecomposition dec =
      star_decompose(g, all_vertices(300), default_degree_cap(g, 0.1), false);
  const SampleOutcome out = star_bisection(g, {}, dec, 0.1, 5);
  for (const Star& s : dec.stars) {
    for (Vertex leaf : s.leaves) EXPECT_NE(out.partition.side(leaf), out.partition.side(s.apex));
  }
  EXPECT_EQ(out.stats, cut_stats(g, out.partition));
  const BisectionTargets t = bisection_targets(g, {}, dec, 0.1);
  EXPECT_EQ(t.odd_count, dec.tau);
  EXPECT_DOUBLE_EQ(out.target12, t.target12);
}

TEST(StarBisection, TargetUsesTauPrimeWhenSeeded) {
  const Digraph g = random_min_outdeg(100, 3, 0.2, 8);
  const StarDecomposition dec =
      star_decompose(g, all_vertices(100), default_degree_cap(g, 0.1), true);
  EXPECT_EQ(bisection_targets(g, {}, dec, 0.1).odd_count, dec.tau_prime);
}

TEST(StarBisection, RejectsIncompleteCover) {
  const Digraph g = random_min_outdeg(30, 2, 0, 8);
  const std::vector<Vertex> half{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const StarDecomposition dec = star_decompose(g, half, 100.0, false);
  EXPECT_THROW(star_bisection(g, {}, dec, 0.1, 1), InputError);
}

#include <gtest/gtest.h>

#include "judicious/core.hpp"

using namespace judicious;

namespace {

Digraph make(Vertex n, std::vector<Edge> edges) { return Digraph::from_edge_list(n, edges); }

std::optional<std::int64_t> error_position(Vertex n, std::vector<Edge> edges) {
  try {
    make(n, std::move(edges));
  } catch (const InputError& e) {
    return e.position();
  }
  return std::nullopt;
}

}  // namespace

TEST(Digraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_EQ(error_position(3, {{0, 1}, {1, 1}}), 1);
  EXPECT_EQ(error_position(3, {{0, 1}, {1, 2}, {0, 1}}), 2);
  EXPECT_EQ(error_position(3, {{0, 3}}), 0);
  EXPECT_EQ(error_position(3, {{-1, 0}}), 0);
}

TEST(Digraph, AntiparallelAllowed) {
  const Digraph g = make(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(antiparallel_pairs(g), 1);
  EXPECT_EQ(underlying(g).edge_count(), 1);
}

TEST(Digraph, DegreesAndAdjacency) {
  const Digraph g = make(4, {{0, 1}, {0, 2}, {3, 0}, {2, 1}});
  EXPECT_EQ(g.out_degree(0), 2);
  EXPECT_EQ(g.in_degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(min_out_degree(g), 0);
  EXPECT_EQ(min_out_degree_vertex(g), 1);
  EXPECT_EQ(max_degree(g), 3);
  const DegreeTriple t = degrees(g, 0);
  EXPECT_EQ(t.total, 3);
  // Edges come back sorted.
  EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end()));
}

TEST(CutStats, TriangleAndSwap) {
  const Digraph g = make(3, {{0, 1}, {1, 2}, {2, 0}});
  Bipartition p(3);
  EXPECT_EQ(cut_stats(g, p), (CutStats{0, 0}));
  p.assign(0, Side::second);
  const CutStats s = cut_stats(g, p);
  EXPECT_EQ(s.e12, 1);
  EXPECT_EQ(s.e21, 1);
  const CutStats w = cut_stats(g, p.swapped());
  EXPECT_EQ(w.e12, s.e21);
  EXPECT_EQ(w.e21, s.e12);
  EXPECT_THROW(cut_stats(g, Bipartition(2)), InputError);
}

TEST(Underlying, ComponentsAndOddCount) {
  const std::vector<Edge> pairs{{0, 1}, {1, 2}, {3, 4}};
  const UnderlyingGraph g = UnderlyingGraph::from_pairs(6, pairs);
  EXPECT_EQ(connected_components(g).size(), 3U);
  EXPECT_EQ(odd_components(g), 2);  // {0,1,2} and {5}
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Induced, RelabelsAscending) {
  const Digraph g = make(5, {{0, 2}, {2, 4}, {4, 0}, {1, 3}});
  const std::vector<Vertex> keep{4, 0, 2};
  const Induced<Digraph> sub = induced(g, keep);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(sub.graph.edge_count(), 3);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_THROW(normalized_vertex_set(5, std::vector<Vertex>{7}), InputError);
  EXPECT_EQ(normalized_vertex_set(5, std::vector<Vertex>{3, 1, 3}), (std::vector<Vertex>{1, 3}));
}

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "judicious/core.hpp"

namespace judicious {

/// Matching stored as a mate array; `mate[v] == -1` marks v unmatched.
class Matching {
 public:
  Matching() = default;
  explicit Matching(Vertex n) : mate_(static_cast<std::size_t>(n), -1) {}

  Vertex vertex_count() const { return static_cast<Vertex>(mate_.size()); }
  Vertex mate(Vertex v) const { return mate_.at(static_cast<std::size_t>(v)); }
  bool matched(Vertex v) const { return mate(v) >= 0; }

  /// Adds {u, v}; both must currently be unmatched.
  void match(Vertex u, Vertex v);
  void unmatch(Vertex v);

  std::int64_t size() const;
  /// Matching edges as (smaller, larger), sorted by smaller endpoint.
  std::vector<Edge> edges() const;
  /// The set W of unmatched vertices, ascending.
  std::vector<Vertex> unmatched() const;

  /// True if every mate pair is symmetric and an edge of `graph`.
  bool valid_in(const UnderlyingGraph& graph) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm, seeded greedily).
Matching maximum_matching(const UnderlyingGraph& graph);

/// A matched vertex x is a free neighbour of unmatched w when w ~ x but w is
/// not adjacent to mate(x). w is free if it has a free neighbour.
bool is_free(const UnderlyingGraph& graph, const Matching& matching, Vertex w);
std::int64_t free_vertex_count(const UnderlyingGraph& graph, const Matching& matching);

/// Applies the exchange steps of the free-vertex/tight-component argument
/// until every non-free unmatched vertex sits in a tight component of its own.
/// Each exchange keeps the matching size and raises the free count by at
/// least one. Throws InputError if `matching` is not maximum and
/// StructuralError if an exchange fails to raise the free count.
Matching maximize_free_vertices(const UnderlyingGraph& graph, Matching matching);

struct TightComponent {
  std::vector<Vertex> vertices;  // ascending
  Vertex unmatched = -1;         // the non-free W-vertex it contains
  bool antiparallel_lift = false;
};

struct TightReport {
  std::vector<TightComponent> components;  // ordered by their W-vertex
};

/// One tight component per non-free unmatched vertex, grown from that vertex
/// by absorbing matched pairs until it is a whole connected component.
/// Throws InputError when an exchange would still raise the free count, i.e.
/// `matching` is not the output of maximize_free_vertices.
TightReport tight_components(const UnderlyingGraph& graph, const Matching& matching);

/// Definitional check by enumeration, for graphs of at most 9 vertices: the
/// graph is connected and, for every v, G - v has a perfect matching and no
/// perfect matching of G - v has an edge with exactly one endpoint adjacent
/// to v. Throws InputError above 9 vertices.
bool brute_force_tight_check(const UnderlyingGraph& component);

struct Star {
  Vertex apex = -1;
  Edge seed;                  // the matching edge the star grew from
  std::vector<Vertex> leaves;  // every non-apex vertex, ascending
  std::int64_t size() const { return static_cast<std::int64_t>(leaves.size()) + 1; }
};

/// Induced stars plus an independent leftover set over the underlying graph
/// of D[B]. All vertex ids are ids of the full digraph.
struct StarDecomposition {
  std::vector<Vertex> vertex_set;  // B, ascending
  std::vector<Star> stars;
  std::vector<Vertex> leftover;    // U, ascending
  std::int64_t tau = 0;            // odd components of the underlying D[B]
  std::int64_t tight_count = 0;
  std::int64_t sigma = 0;          // 3-vertex tight components with an antiparallel lift
  std::int64_t tau_prime = 0;      // tight_count - sigma
  double degree_cap = 0.0;
  bool antiparallel_seeded = false;
  std::vector<TightComponent> tight;
};

/// Degree threshold 2C/epsilon with C = m/n of `graph`.
double default_degree_cap(const Digraph& graph, double epsilon);

/// U collects non-free unmatched vertices and unmatched vertices whose full
/// digraph degree exceeds `degree_cap`; every other unmatched vertex joins
/// the star of the lowest-indexed matching edge that is its free neighbour.
/// With `prefer_antiparallel`, each triangle tight component that lifts to
/// an antiparallel pair is seeded on such a pair.
StarDecomposition star_decompose(const Digraph& graph, std::span<const Vertex> vertex_set,
                                 double degree_cap, bool prefer_antiparallel);

}  // namespace judicious

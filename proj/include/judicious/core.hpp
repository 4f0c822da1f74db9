#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace judicious {

using Vertex = std::int32_t;

/// Rejected input: malformed edge lists, loops, duplicates, out-of-range ids,
/// violated preconditions. `position()` is the offending edge index or vertex
/// when one exists.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what,
                      std::optional<std::int64_t> position = std::nullopt)
      : std::invalid_argument(what), position_(position) {}

  std::optional<std::int64_t> position() const { return position_; }

 private:
  std::optional<std::int64_t> position_;
};

/// A structural property that the underlying combinatorics guarantees was
/// observed to fail. Indicates a bug or a violated precondition upstream.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loop-free digraph on vertices 0..n-1 without duplicate directed edges.
/// Antiparallel pairs (u,v),(v,u) are allowed. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Throws InputError naming the edge position for
  /// loops, duplicates and out-of-range endpoints.
  static Digraph from_edge_list(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  /// Edges sorted by (tail, head).
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;

  std::int64_t out_degree(Vertex v) const;
  std::int64_t in_degree(Vertex v) const;
  std::int64_t degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  bool has_edge(Vertex tail, Vertex head) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

 private:
  void check_vertex(Vertex v) const;
  std::uint64_t key(Vertex tail, Vertex head) const {
    return static_cast<std::uint64_t>(tail) * static_cast<std::uint64_t>(n_) +
           static_cast<std::uint64_t>(head);
  }

  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::int64_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

enum class Side : std::uint8_t { first = 1, second = 2 };

inline Side opposite(Side s) { return s == Side::first ? Side::second : Side::first; }

/// Two-colouring of vertices 0..n-1 with labels 1 and 2.
class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(Vertex n, Side fill = Side::first)
      : sides_(static_cast<std::size_t>(n), fill) {}
  explicit Bipartition(std::vector<Side> sides) : sides_(std::move(sides)) {}

  Vertex size() const { return static_cast<Vertex>(sides_.size()); }
  Side side(Vertex v) const { return sides_.at(static_cast<std::size_t>(v)); }
  bool on_first(Vertex v) const { return side(v) == Side::first; }
  void assign(Vertex v, Side s) { sides_.at(static_cast<std::size_t>(v)) = s; }
  void flip(Vertex v) { assign(v, opposite(side(v))); }

  std::span<const Side> sides() const { return sides_; }

  /// Same partition with the two labels exchanged.
  Bipartition swapped() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Side> sides_;
};

struct CutStats {
  std::int64_t e12 = 0;
  std::int64_t e21 = 0;

  std::int64_t min_cut() const { return e12 < e21 ? e12 : e21; }
  friend bool operator==(const CutStats&, const CutStats&) = default;
};

/// Single pass over the edges. Throws InputError if sizes differ.
CutStats cut_stats(const Digraph& graph, const Bipartition& partition);

/// Simple undirected graph; adjacency lists are sorted.
class UnderlyingGraph {
 public:
  UnderlyingGraph() = default;

  /// Builds from unordered pairs. Duplicate pairs collapse; loops are rejected.
  static UnderlyingGraph from_pairs(Vertex n, std::span<const Edge> pairs);

  Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  /// Each edge once, as (smaller, larger), sorted.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::int64_t degree(Vertex v) const {
    return static_cast<std::int64_t>(neighbors(v).size());
  }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Ignores orientation; antiparallel pairs collapse to one edge.
UnderlyingGraph underlying(const Digraph& graph);

struct DegreeTriple {
  std::int64_t out = 0;
  std::int64_t in = 0;
  std::int64_t total = 0;
};

DegreeTriple degrees(const Digraph& graph, Vertex v);
std::int64_t min_out_degree(const Digraph& graph);
/// A vertex attaining the minimum out-degree (lowest id); -1 on empty graphs.
Vertex min_out_degree_vertex(const Digraph& graph);
std::int64_t antiparallel_pairs(const Digraph& graph);
std::int64_t max_degree(const Digraph& graph);

std::vector<std::vector<Vertex>> connected_components(const UnderlyingGraph& graph);
std::int64_t odd_components(const UnderlyingGraph& graph);

/// Induced subgraph with vertices relabelled 0..|S|-1 in ascending original
/// order; `original[i]` is the old id of new vertex i.
template <typename Graph>
struct Induced {
  Graph graph;
  std::vector<Vertex> original;
};

Induced<Digraph> induced(const Digraph& graph, std::span<const Vertex> vertices);
Induced<UnderlyingGraph> induced(const UnderlyingGraph& graph,
                                 std::span<const Vertex> vertices);

/// Returns the sorted, deduplicated vertex set; throws InputError on ids
/// outside [0, n).
std::vector<Vertex> normalized_vertex_set(Vertex n, std::span<const Vertex> vertices);

}  // namespace judicious

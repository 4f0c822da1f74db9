#include "judicious/core.hpp"

#include <algorithm>
#include <numeric>

namespace judicious {

namespace {

template <typename T>
std::span<const T> slice(const std::vector<T>& data, const std::vector<std::int64_t>& offsets,
                         Vertex v) {
  const auto begin = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(offsets[static_cast<std::size_t>(v) + 1]);
  return std::span<const T>(data).subspan(begin, end - begin);
}

}  // namespace

Digraph Digraph::from_edge_list(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Digraph g;
  g.n_ = n;
  g.edge_keys_.reserve(edges.size());
  g.edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const auto pos = static_cast<std::int64_t>(i);
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(e.tail) + "," +
                           std::to_string(e.head) + ") has an endpoint outside [0," +
                           std::to_string(n) + ")",
                       pos);
    }
    if (e.tail == e.head) {
      throw InputError("edge " + std::to_string(i) + " is a loop at vertex " +
                           std::to_string(e.tail),
                       pos);
    }
    if (!g.edge_keys_.insert(g.key(e.tail, e.head)).second) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(e.tail) + "," +
                           std::to_string(e.head) + ") duplicates an earlier edge",
                       pos);
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  const auto un = static_cast<std::size_t>(n);
  g.out_offsets_.assign(un + 1, 0);
  g.in_offsets_.assign(un + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_offsets_[static_cast<std::size_t>(e.tail) + 1];
    ++g.in_offsets_[static_cast<std::size_t>(e.head) + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());
  g.out_targets_.resize(g.edges_.size());
  g.in_sources_.resize(g.edges_.size());
  std::vector<std::int64_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.out_targets_[i] = e.head;  // edges_ is sorted by tail, so CSR order matches
    g.in_sources_[static_cast<std::size_t>(in_fill[static_cast<std::size_t>(e.head)]++)] =
        e.tail;
  }
  return g;
}

void Digraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw InputError("unknown vertex " + std::to_string(v), v);
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return slice(out_targets_, out_offsets_, v);
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return slice(in_sources_, in_offsets_, v);
}

std::int64_t Digraph::out_degree(Vertex v) const {
  check_vertex(v);
  const auto i = static_cast<std::size_t>(v);
  return out_offsets_[i + 1] - out_offsets_[i];
}

std::int64_t Digraph::in_degree(Vertex v) const {
  check_vertex(v);
  const auto i = static_cast<std::size_t>(v);
  return in_offsets_[i + 1] - in_offsets_[i];
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return false;
  return edge_keys_.contains(key(tail, head));
}

Bipartition Bipartition::swapped() const {
  std::vector<Side> out(sides_.size());
  std::transform(sides_.begin(), sides_.end(), out.begin(), opposite);
  return Bipartition(std::move(out));
}

CutStats cut_stats(const Digraph& graph, const Bipartition& partition) {
  if (partition.size() != graph.vertex_count()) {
    throw InputError("partition covers " + std::to_string(partition.size()) +
                     " vertices but the graph has " + std::to_string(graph.vertex_count()));
  }
  CutStats stats;
  const auto sides = partition.sides();
  for (const Edge& e : graph.edges()) {
    const Side a = sides[static_cast<std::size_t>(e.tail)];
    const Side b = sides[static_cast<std::size_t>(e.head)];
    if (a == b) continue;
    if (a == Side::first) {
      ++stats.e12;
    } else {
      ++stats.e21;
    }
  }
  return stats;
}

UnderlyingGraph UnderlyingGraph::from_pairs(Vertex n, std::span<const Edge> pairs) {
  UnderlyingGraph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(pairs.size());
  for (const Edge& e : pairs) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw InputError("pair endpoint outside [0," + std::to_string(n) + ")");
    }
    if (e.tail == e.head) throw InputError("loop in undirected graph", e.tail);
    g.edges_.push_back({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.tail)].push_back(e.head);
    g.adjacency_[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

std::span<const Vertex> UnderlyingGraph::neighbors(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw InputError("unknown vertex " + std::to_string(v), v);
  return adjacency_[static_cast<std::size_t>(v)];
}

bool UnderlyingGraph::adjacent(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

UnderlyingGraph underlying(const Digraph& graph) {
  return UnderlyingGraph::from_pairs(graph.vertex_count(), graph.edges());
}

DegreeTriple degrees(const Digraph& graph, Vertex v) {
  const std::int64_t out = graph.out_degree(v);
  const std::int64_t in = graph.in_degree(v);
  return {out, in, out + in};
}

std::int64_t min_out_degree(const Digraph& graph) {
  const Vertex v = min_out_degree_vertex(graph);
  return v < 0 ? 0 : graph.out_degree(v);
}

Vertex min_out_degree_vertex(const Digraph& graph) {
  Vertex best = -1;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (best < 0 || graph.out_degree(v) < graph.out_degree(best)) best = v;
  }
  return best;
}

std::int64_t antiparallel_pairs(const Digraph& graph) {
  std::int64_t count = 0;
  for (const Edge& e : graph.edges()) {
    if (e.tail < e.head && graph.has_edge(e.head, e.tail)) ++count;
  }
  return count;
}

std::int64_t max_degree(const Digraph& graph) {
  std::int64_t best = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) best = std::max(best, graph.degree(v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const UnderlyingGraph& graph) {
  const Vertex n = graph.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> component;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex u : graph.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::int64_t odd_components(const UnderlyingGraph& graph) {
  std::int64_t odd = 0;
  for (const auto& c : connected_components(graph)) {
    if (c.size() % 2 == 1) ++odd;
  }
  return odd;
}

std::vector<Vertex> normalized_vertex_set(Vertex n, std::span<const Vertex> vertices) {
  std::vector<Vertex> out(vertices.begin(), vertices.end());
  for (Vertex v : out) {
    if (v < 0 || v >= n) throw InputError("unknown vertex " + std::to_string(v), v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Vertex> relabel_map(Vertex n, const std::vector<Vertex>& kept) {
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    local[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
  }
  return local;
}

}  // namespace

Induced<Digraph> induced(const Digraph& graph, std::span<const Vertex> vertices) {
  std::vector<Vertex> kept = normalized_vertex_set(graph.vertex_count(), vertices);
  const std::vector<Vertex> local = relabel_map(graph.vertex_count(), kept);
  std::vector<Edge> edges;
  for (Vertex v : kept) {
    for (Vertex u : graph.out_neighbors(v)) {
      const Vertex lu = local[static_cast<std::size_t>(u)];
      if (lu >= 0) edges.push_back({local[static_cast<std::size_t>(v)], lu});
    }
  }
  const auto size = static_cast<Vertex>(kept.size());
  return {Digraph::from_edge_list(size, edges), std::move(kept)};
}

Induced<UnderlyingGraph> induced(const UnderlyingGraph& graph,
                                 std::span<const Vertex> vertices) {
  std::vector<Vertex> kept = normalized_vertex_set(graph.vertex_count(), vertices);
  const std::vector<Vertex> local = relabel_map(graph.vertex_count(), kept);
  std::vector<Edge> pairs;
  for (Vertex v : kept) {
    for (Vertex u : graph.neighbors(v)) {
      const Vertex lu = local[static_cast<std::size_t>(u)];
      if (lu >= 0 && v < u) pairs.push_back({local[static_cast<std::size_t>(v)], lu});
    }
  }
  const auto size = static_cast<Vertex>(kept.size());
  return {UnderlyingGraph::from_pairs(size, pairs), std::move(kept)};
}

}  // namespace judicious

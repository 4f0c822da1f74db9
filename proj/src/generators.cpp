#include "judicious/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_set>

namespace judicious {

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
  std::string_view alias;
};

constexpr FamilyName kFamilies[] = {
    {Family::d1_star_triangle, "d1_star_triangle", "d1"},
    {Family::eulerian_complete, "eulerian_complete", "eulerian"},
    {Family::lower_bound, "lower_bound", "lower_bound_gadget"},
    {Family::k33_oriented, "k33_oriented", "k33"},
    {Family::k33_plus_3regular, "k33_plus_3regular", "k33_plus"},
    {Family::k55_mixed, "k55_mixed", "k55"},
    {Family::random_min_outdeg, "random_min_outdeg", "random"},
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

// Hierholzer's walk on K_q; consecutive circuit vertices give the orientation.
std::vector<Edge> eulerian_circuit_edges(std::int32_t q, Vertex offset) {
  const auto uq = static_cast<std::size_t>(q);
  std::vector<std::vector<char>> used(uq, std::vector<char>(uq, 0));
  std::vector<Vertex> cursor(uq, 0);
  std::vector<Vertex> stack{0};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& next = cursor[static_cast<std::size_t>(v)];
    while (next < q && (next == v || used[static_cast<std::size_t>(v)][static_cast<std::size_t>(next)])) {
      ++next;
    }
    if (next == q) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    const Vertex u = next;
    used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    stack.push_back(u);
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<Edge> edges;
  edges.reserve(circuit.size());
  for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
    edges.push_back({circuit[i] + offset, circuit[i + 1] + offset});
  }
  return edges;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name || f.alias == name) return f.family;
  }
  throw InputError("unknown generator family '" + std::string(name) + "'");
}

std::string describe(const GadgetSpec& spec) {
  std::string out(family_name(spec.family));
  switch (spec.family) {
    case Family::d1_star_triangle:
    case Family::k33_oriented:
    case Family::k33_plus_3regular:
    case Family::k55_mixed:
      out += "(n=" + std::to_string(spec.n) + ")";
      break;
    case Family::eulerian_complete:
      out += "(q=" + std::to_string(spec.q) + ")";
      break;
    case Family::lower_bound:
      out += "(d=" + std::to_string(spec.d) + ",k=" + std::to_string(spec.k) + ")";
      break;
    case Family::random_min_outdeg: {
      char extra[32];
      std::snprintf(extra, sizeof extra, "%g", spec.extra);
      out += "(n=" + std::to_string(spec.n) + ",d=" + std::to_string(spec.d) +
             ",extra=" + extra + ",seed=" + std::to_string(spec.seed) + ")";
      break;
    }
  }
  if (spec.pad_out_degree) out += "+pad" + std::to_string(*spec.pad_out_degree);
  return out;
}

Digraph generate(const GadgetSpec& spec) {
  Digraph g;
  switch (spec.family) {
    case Family::d1_star_triangle:
      g = d1_gadget(spec.n);
      break;
    case Family::eulerian_complete:
      g = eulerian_complete(spec.q);
      break;
    case Family::lower_bound:
      g = lower_bound_gadget(spec.d, spec.k).graph;
      break;
    case Family::k33_oriented:
      g = k33_oriented(spec.n);
      break;
    case Family::k33_plus_3regular:
      g = k33_plus_3regular(spec.n);
      break;
    case Family::k55_mixed:
      g = k55_mixed(spec.n);
      break;
    case Family::random_min_outdeg:
      g = random_min_outdeg(spec.n, spec.d, spec.extra, spec.seed);
      break;
  }
  if (spec.pad_out_degree) g = pad_min_out_degree(g, *spec.pad_out_degree);
  return g;
}

Digraph eulerian_complete(std::int32_t q) {
  require(q >= 3 && q % 2 == 1, "eulerian_complete needs an odd q >= 3, got " + std::to_string(q));
  const auto edges = eulerian_circuit_edges(q, 0);
  return Digraph::from_edge_list(q, edges);
}

LowerBoundGadget lower_bound_gadget(std::int32_t d, std::int32_t k) {
  require(d >= 2, "lower_bound_gadget needs d >= 2, got " + std::to_string(d));
  require(k >= 0, "lower_bound_gadget needs k >= 0, got " + std::to_string(k));
  const std::int32_t small = 2 * d - 1;
  const std::int32_t big = 2 * d + 1;
  const Vertex hub = k * small;
  std::vector<Edge> edges;
  for (std::int32_t copy = 0; copy < k; ++copy) {
    const auto part = eulerian_circuit_edges(small, copy * small);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  const auto top = eulerian_circuit_edges(big, hub);
  edges.insert(edges.end(), top.begin(), top.end());
  for (Vertex v = 0; v < hub; ++v) edges.push_back({v, hub});
  return {Digraph::from_edge_list(hub + big, edges), hub};
}

Digraph d1_gadget(std::int32_t n) {
  require(n >= 4, "d1_gadget needs n >= 4, got " + std::to_string(n));
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  for (Vertex leaf = 3; leaf < n; ++leaf) edges.push_back({leaf, 0});
  return Digraph::from_edge_list(n, edges);
}

Digraph k33_oriented(std::int32_t n) {
  require(n >= 4, "k33_oriented needs n >= 4, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 3; v < n; ++v) {
    for (Vertex hub = 0; hub < 3; ++hub) edges.push_back({v, hub});
  }
  return Digraph::from_edge_list(n, edges);
}

Digraph k33_plus_3regular(std::int32_t n) {
  require(n >= 7, "k33_plus_3regular needs n >= 7, got " + std::to_string(n));
  const std::int32_t big = n - 3;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < big; ++i) {
    for (Vertex hub = 0; hub < 3; ++hub) edges.push_back({i + 3, hub});
    for (std::int32_t step = 1; step <= 3; ++step) {
      edges.push_back({i + 3, (i + step) % big + 3});
    }
  }
  return Digraph::from_edge_list(n, edges);
}

Digraph k55_mixed(std::int32_t n) {
  require(n >= 6, "k55_mixed needs n >= 6, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 5; v < n; ++v) {
    edges.push_back({0, v});
    for (Vertex sink = 1; sink < 5; ++sink) edges.push_back({v, sink});
  }
  return Digraph::from_edge_list(n, edges);
}

Digraph random_min_outdeg(std::int32_t n, std::int32_t d, double extra, std::uint64_t seed) {
  require(n >= 1, "random_min_outdeg needs n >= 1");
  require(d >= 0 && d < n, "random_min_outdeg needs 0 <= d < n, got d=" + std::to_string(d) +
                               " n=" + std::to_string(n));
  require(extra >= 0.0, "random_min_outdeg needs extra >= 0");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> present;
  const auto key = [n](Vertex t, Vertex h) {
    return static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(h);
  };
  std::uniform_int_distribution<Vertex> other(0, n - 2);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<std::int64_t>(d) * 4 < n) {
      std::vector<Vertex> chosen;
      while (static_cast<std::int32_t>(chosen.size()) < d) {
        Vertex u = other(rng);
        if (u >= v) ++u;
        if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
      }
      for (Vertex u : chosen) edges.push_back({v, u});
    } else {
      pool.clear();
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) pool.push_back(u);
      }
      std::vector<Vertex> chosen;
      std::sample(pool.begin(), pool.end(), std::back_inserter(chosen), d, rng);
      for (Vertex u : chosen) edges.push_back({v, u});
    }
  }
  for (const Edge& e : edges) present.insert(key(e.tail, e.head));
  const auto attempts = static_cast<std::int64_t>(std::llround(extra * n));
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  for (std::int64_t i = 0; i < attempts; ++i) {
    const Vertex t = any(rng);
    const Vertex h = any(rng);
    if (t == h || !present.insert(key(t, h)).second) continue;
    edges.push_back({t, h});
  }
  return Digraph::from_edge_list(n, edges);
}

Digraph pad_min_out_degree(const Digraph& graph, std::int32_t d) {
  const Vertex n = graph.vertex_count();
  require(d >= 0 && d < n, "pad_min_out_degree needs 0 <= d < n");
  std::vector<Edge> edges(graph.edges().begin(), graph.edges().end());
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t out = graph.out_degree(v);
    for (Vertex u = 0; u < n && out < d; ++u) {
      if (u == v || graph.has_edge(v, u)) continue;
      edges.push_back({v, u});
      ++out;
    }
  }
  return Digraph::from_edge_list(n, edges);
}

}  // namespace judicious

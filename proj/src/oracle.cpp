#include "judicious/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <thread>

namespace judicious {

namespace {

struct SweepBest {
  std::int64_t optimum = -1;
  std::uint32_t key = 0;  // bit (n-1-v) set when v is on side 2
};

// Evaluates Gray codes g(i) for i in [begin, end). Bit v of the code puts
// vertex v (< n-1) on side 2.
SweepBest sweep(const Digraph& graph, std::uint64_t begin, std::uint64_t end) {
  const Vertex n = graph.vertex_count();
  const auto gray = [](std::uint64_t i) { return i ^ (i >> 1); };
  std::vector<char> second(static_cast<std::size_t>(n), 0);
  std::uint64_t code = gray(begin);
  std::uint32_t key = 0;
  for (Vertex v = 0; v + 1 < n; ++v) {
    if ((code >> v) & 1U) {
      second[static_cast<std::size_t>(v)] = 1;
      key |= 1U << (n - 1 - v);
    }
  }
  CutStats stats;
  for (const Edge& e : graph.edges()) {
    const bool a = second[static_cast<std::size_t>(e.tail)];
    const bool b = second[static_cast<std::size_t>(e.head)];
    if (!a && b) ++stats.e12;
    if (a && !b) ++stats.e21;
  }
  SweepBest best;
  for (std::uint64_t i = begin;;) {
    const std::int64_t value = stats.min_cut();
    if (value > best.optimum || (value == best.optimum && key < best.key)) {
      best = {value, key};
    }
    if (++i >= end) break;
    const auto v = static_cast<Vertex>(std::countr_zero(i));
    const bool was_second = second[static_cast<std::size_t>(v)];
    // Moving v across the cut: out-edges and in-edges change direction class.
    for (Vertex u : graph.out_neighbors(v)) {
      const bool other = second[static_cast<std::size_t>(u)];
      if (was_second) {
        if (!other) --stats.e21; else ++stats.e12;
      } else {
        if (other) --stats.e12; else ++stats.e21;
      }
    }
    for (Vertex u : graph.in_neighbors(v)) {
      const bool other = second[static_cast<std::size_t>(u)];
      if (was_second) {
        if (!other) --stats.e12; else ++stats.e21;
      } else {
        if (other) --stats.e21; else ++stats.e12;
      }
    }
    second[static_cast<std::size_t>(v)] = was_second ? 0 : 1;
    key ^= 1U << (n - 1 - v);
  }
  return best;
}

void enumerate_from(const UnderlyingGraph& graph, std::vector<char>& used,
                    std::vector<Edge>& current, std::vector<std::vector<Edge>>& out) {
  const Vertex n = graph.vertex_count();
  Vertex first = 0;
  while (first < n && used[static_cast<std::size_t>(first)]) ++first;
  if (first == n) {
    out.push_back(current);
    return;
  }
  used[static_cast<std::size_t>(first)] = 1;
  for (Vertex u : graph.neighbors(first)) {
    if (used[static_cast<std::size_t>(u)]) continue;
    used[static_cast<std::size_t>(u)] = 1;
    current.push_back({first, u});
    enumerate_from(graph, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(u)] = 0;
  }
  used[static_cast<std::size_t>(first)] = 0;
}

std::int64_t max_matching_from(const UnderlyingGraph& graph, std::vector<char>& used,
                               Vertex from) {
  const Vertex n = graph.vertex_count();
  while (from < n && used[static_cast<std::size_t>(from)]) ++from;
  if (from >= n) return 0;
  // Either `from` stays unmatched, or it is matched to a free neighbour.
  used[static_cast<std::size_t>(from)] = 1;
  std::int64_t best = max_matching_from(graph, used, from + 1);
  for (Vertex u : graph.neighbors(from)) {
    if (used[static_cast<std::size_t>(u)]) continue;
    used[static_cast<std::size_t>(u)] = 1;
    best = std::max(best, 1 + max_matching_from(graph, used, from + 1));
    used[static_cast<std::size_t>(u)] = 0;
  }
  used[static_cast<std::size_t>(from)] = 0;
  return best;
}

}  // namespace

OracleResult exact_judicious(const Digraph& graph, unsigned threads) {
  const Vertex n = graph.vertex_count();
  if (n > kOracleMaxVertices) {
    throw InputError("exact_judicious is limited to " + std::to_string(kOracleMaxVertices) +
                     " vertices, got " + std::to_string(n));
  }
  OracleResult result;
  if (n == 0) return result;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  threads = std::clamp<unsigned>(threads, 1, 64);
  if (total < 4096) threads = 1;
  std::vector<SweepBest> parts(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] { parts[t] = sweep(graph, begin, end); });
    }
  }
  SweepBest best = parts.front();
  for (const SweepBest& p : parts) {
    if (p.optimum > best.optimum || (p.optimum == best.optimum && p.key < best.key)) best = p;
  }
  Bipartition witness(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((best.key >> (n - 1 - v)) & 1U) witness.assign(v, Side::second);
  }
  result.optimum = best.optimum;
  result.witness = std::move(witness);
  result.evaluated = total;
  return result;
}

std::int64_t exact_max_forward_cut(const Digraph& graph, Vertex pinned) {
  const Vertex n = graph.vertex_count();
  if (n > kOracleMaxVertices) throw InputError("exact_max_forward_cut: too many vertices");
  if (!graph.contains(pinned)) throw InputError("unknown vertex", pinned);
  std::int64_t best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if ((mask >> pinned) & 1U) continue;  // bit set = side 2
    std::int64_t forward = 0;
    for (const Edge& e : graph.edges()) {
      if (!((mask >> e.tail) & 1U) && ((mask >> e.head) & 1U)) ++forward;
    }
    best = std::max(best, forward);
  }
  return best;
}

std::int64_t exact_min_gap(std::span<const std::int64_t> surpluses) {
  if (surpluses.size() > 15) throw InputError("exact_min_gap is limited to 15 values");
  std::int64_t best = -1;
  const std::uint32_t total = 1U << surpluses.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < surpluses.size(); ++i) {
      sum += ((mask >> i) & 1U) ? surpluses[i] : -surpluses[i];
    }
    if (best < 0 || std::llabs(sum) < best) best = std::llabs(sum);
  }
  return best < 0 ? 0 : best;
}

std::int64_t exact_max_matching(const UnderlyingGraph& graph) {
  if (graph.vertex_count() > 12) throw InputError("exact_max_matching is limited to 12 vertices");
  std::vector<char> used(static_cast<std::size_t>(graph.vertex_count()), 0);
  return max_matching_from(graph, used, 0);
}

std::vector<std::vector<Edge>> enumerate_perfect_matchings(const UnderlyingGraph& graph) {
  if (graph.vertex_count() > 10) {
    throw InputError("enumerate_perfect_matchings is limited to 10 vertices");
  }
  std::vector<std::vector<Edge>> out;
  if (graph.vertex_count() % 2 == 1) return out;
  std::vector<char> used(static_cast<std::size_t>(graph.vertex_count()), 0);
  std::vector<Edge> current;
  enumerate_from(graph, used, current, out);
  return out;
}

}  // namespace judicious

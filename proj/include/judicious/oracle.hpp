#pragma once

// Exhaustive ground truth for small instances. Nothing in the pipeline may
// include this header.

#include <cstdint>
#include <span>
#include <vector>

#include "judicious/core.hpp"

namespace judicious {

struct OracleResult {
  std::int64_t optimum = 0;     // max over bipartitions of min(e12, e21)
  Bipartition witness;          // lexicographically smallest optimal side vector
  std::uint64_t evaluated = 0;  // 2^(n-1)
};

inline constexpr Vertex kOracleMaxVertices = 24;

/// Gray-code sweep over all bipartitions with the last vertex pinned to side
/// 1 (label swap maps min-cut to itself). `threads` > 1 range-partitions the
/// sweep; the result does not depend on it.
OracleResult exact_judicious(const Digraph& graph, unsigned threads = 1);

/// Max of e(V1, V2) over bipartitions that put `pinned` on side 1.
std::int64_t exact_max_forward_cut(const Digraph& graph, Vertex pinned);

/// Minimum |sum of +/- s_i| over all sign assignments; at most 15 values.
std::int64_t exact_min_gap(std::span<const std::int64_t> surpluses);

/// Maximum matching size by exhaustive search; at most 12 vertices.
std::int64_t exact_max_matching(const UnderlyingGraph& graph);

/// Every perfect matching, as sorted (smaller, larger) edge lists; at most
/// 10 vertices.
std::vector<std::vector<Edge>> enumerate_perfect_matchings(const UnderlyingGraph& graph);

}  // namespace judicious

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "judicious/core.hpp"

namespace judicious {

/// A large vertex with its degrees toward B (edges inside A removed).
struct LargeVertex {
  Vertex id = 0;
  std::int64_t out = 0;
  std::int64_t in = 0;

  std::int64_t out_surplus() const { return out - in; }
  std::int64_t surplus() const { return out >= in ? out - in : in - out; }
};

/// Builds entries with ids 0.. from signed out-surpluses (positive values
/// become out-degree, negative values in-degree).
std::vector<LargeVertex> large_vertices_from_surpluses(std::span<const std::int64_t> surpluses);

struct LargeSplit {
  std::vector<Vertex> large;  // A: total degree >= n^exponent
  std::vector<Vertex> rest;   // B
  Digraph stripped;           // edges with both ends in A removed
  std::int64_t removed = 0;
};

LargeSplit split_large(const Digraph& graph, double exponent = 0.75);

/// Out/in degrees of each A vertex in the stripped graph.
std::vector<LargeVertex> large_vertex_degrees(const Digraph& stripped,
                                              std::span<const Vertex> large);

struct GapPartition {
  std::vector<Vertex> first;   // A1
  std::vector<Vertex> second;  // A2
  std::int64_t theta = 0;      // forward minus backward A-B edges
  std::int64_t forward = 0;    // e(A1,B) + e(B,A2)
  std::int64_t backward = 0;   // e(B,A1) + e(A2,B)
};

/// Sequential placement, each vertex opposing the running gap; at a running
/// gap of zero the vertex is placed to contribute positively.
GapPartition greedy_gap(std::span<const LargeVertex> large);

/// Exact minimiser of |theta| by subset-sum dynamic programming, normalised
/// so that theta >= 0.
GapPartition min_gap(std::span<const LargeVertex> large);

struct SurplusEntry {
  Vertex id = 0;
  std::int64_t out_surplus = 0;  // d+ - d- toward B
  std::int64_t surplus = 0;
  std::int64_t degree = 0;
  bool huge = false;
};

struct SurplusProfile {
  std::vector<SurplusEntry> entries;  // in A order
  std::vector<Vertex> huge;           // by surplus descending, then id
  std::vector<std::int64_t> deltas;   // surpluses of `huge`, same order
  std::int64_t g = 0;                 // surplus sum of non-huge large vertices
  std::int64_t b = 0;                 // buffer pairs: 2b = sum(d - s)
  std::int64_t m_a = 0;               // sum of degrees toward B
};

/// Huge vertices are those with s(v) >= theta.
SurplusProfile surplus_profile(std::span<const LargeVertex> large, std::int64_t theta);

struct PipelineConfig {
  std::int32_t d = 2;
  double epsilon = 0.05;
  double large_degree_exponent = 0.75;
  std::uint64_t seed = 1;
  std::int32_t max_attempts = 200;
  bool local_search = true;
  /// Divides the dense-branch cutoff by 100 so small instances can reach it.
  /// Results are marked non-conforming.
  bool test_constants = false;

  /// 1152 for d = 2, 3200 for d = 3 (divided by 100 in test mode).
  double dense_threshold() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

enum class Branch {
  dense,          // m >= threshold * n: plain random halving
  small_gap,      // theta <= m/3 (m/5): random halving around the gap split
  star_bisection, // one huge vertex: star-based sampler
  three_huge,     // d = 3 with three huge vertices: biased random split
};

std::string_view branch_name(Branch branch);

struct TraceEntry {
  std::string name;
  std::string value;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct PartitionResult {
  Bipartition partition;
  CutStats stats;            // recomputed on the input digraph
  double guarantee = 0.0;    // ((d-1)/(2(2d-1)) - epsilon) m
  double achieved_ratio = 0.0;
  bool meets_guarantee = false;
  bool conforming = true;    // false in test-constants mode
  Branch branch = Branch::small_gap;
  bool sampler_accepted = false;
  std::int64_t removed_a_edges = 0;
  std::int64_t local_search_gain = 0;
  std::vector<TraceEntry> trace;
};

/// ((d-1)/(2(2d-1)) - epsilon) * m; throws InputError unless d is 2 or 3.
double guarantee_target(std::int32_t d, std::int64_t m, double epsilon);

/// Hill climbing on (min cut, max cut) lexicographically: single-vertex
/// flips, then flips of both endpoints of an edge when no single flip helps.
/// The min cut never decreases.
Bipartition local_search(const Digraph& graph, Bipartition partition);

/// Minimum out-degree 2 pipeline. Throws InputError naming a vertex of
/// out-degree below 2 and StructuralError when a proven structural fact
/// fails on the instance.
PartitionResult run_d2(const Digraph& graph, PipelineConfig config);
/// Minimum out-degree 3 pipeline; same error contract.
PartitionResult run_d3(const Digraph& graph, PipelineConfig config);
/// Dispatches on config.d.
PartitionResult run_pipeline(const Digraph& graph, const PipelineConfig& config);

}  // namespace judicious

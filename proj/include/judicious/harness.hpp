#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "judicious/core.hpp"
#include "judicious/generators.hpp"
#include "judicious/pipeline.hpp"

namespace judicious {

// ---- edge lists and partition files ----
//
// Edge list: first non-comment line `n m`, then m lines `u v`. Lines whose
// first non-blank character is `#` are comments.
// Partition file: one line per vertex, `vertexid side` with side 1 or 2.

Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Digraph& graph);

Bipartition read_partition(std::istream& in, Vertex n);
Bipartition read_partition_file(const std::string& path, Vertex n);
void write_partition(std::ostream& out, const Bipartition& partition);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

/// Canonical hash of a digraph (hash of its written edge list).
std::string graph_hash(const Digraph& graph);

// ---- reports ----

inline constexpr int kSchemaVersion = 1;

struct InstanceInfo {
  std::string descriptor;  // family description or file path
  std::string hash;        // graph_hash of the instance
  std::int64_t n = 0;
  std::int64_t m = 0;
  friend bool operator==(const InstanceInfo&, const InstanceInfo&) = default;
};

struct OracleComparison {
  std::int64_t optimum = 0;
  double ratio = 0.0;  // pipeline min cut / optimum (1 when optimum is 0)
  friend bool operator==(const OracleComparison&, const OracleComparison&) = default;
};

struct RunReport {
  int schema_version = kSchemaVersion;
  InstanceInfo instance;
  PipelineConfig config;
  std::string sides;  // one character '1' or '2' per vertex
  CutStats stats;
  double guarantee = 0.0;
  double achieved_ratio = 0.0;
  bool meets_guarantee = false;
  bool conforming = true;
  std::string branch;
  bool sampler_accepted = false;
  std::int64_t removed_a_edges = 0;
  std::int64_t local_search_gain = 0;
  std::vector<TraceEntry> branch_trace;
  std::map<std::string, double> timings_ms;  // empty unless requested
  std::optional<OracleComparison> oracle;
  std::optional<std::string> error;          // set when the run threw

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const InstanceInfo& instance, const PipelineConfig& config,
                      const PartitionResult& result);

nlohmann::json to_json(const RunReport& report);
/// Inverse of to_json; throws InputError on schema mismatch.
RunReport report_from_json(const nlohmann::json& json);

Bipartition sides_to_partition(std::string_view sides);
std::string partition_to_sides(const Bipartition& partition);

// ---- benchmark suites ----

struct SuiteEntry {
  GadgetSpec spec;
  PipelineConfig config;
  bool compare_oracle = false;
};

/// `gadgets`, `random-d2`, `random-d3`, `oracle-small`.
std::vector<std::string> suite_names();
std::vector<SuiteEntry> suite(std::string_view name);

/// Runs every entry; reports come back in entry order regardless of `jobs`.
/// Structural errors are captured in RunReport::error.
std::vector<RunReport> run_suite(const std::vector<SuiteEntry>& entries, unsigned jobs,
                                 bool timings = false);

RunReport run_entry(const SuiteEntry& entry, bool timings = false);

// ---- command line ----

/// Exit codes: 0 success, 1 invalid input, 2 guarantee not met under
/// --strict, 3 structural diagnostic.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace judicious

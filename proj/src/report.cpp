#include "judicious/harness.hpp"

namespace judicious {

using nlohmann::json;

std::string partition_to_sides(const Bipartition& partition) {
  std::string sides;
  sides.reserve(static_cast<std::size_t>(partition.size()));
  for (Side s : partition.sides()) sides.push_back(s == Side::first ? '1' : '2');
  return sides;
}

Bipartition sides_to_partition(std::string_view sides) {
  std::vector<Side> out;
  out.reserve(sides.size());
  for (char c : sides) {
    if (c != '1' && c != '2') throw InputError("sides must consist of '1' and '2'");
    out.push_back(c == '1' ? Side::first : Side::second);
  }
  return Bipartition(std::move(out));
}

RunReport make_report(const InstanceInfo& instance, const PipelineConfig& config,
                      const PartitionResult& result) {
  RunReport r;
  r.instance = instance;
  r.config = config;
  r.sides = partition_to_sides(result.partition);
  r.stats = result.stats;
  r.guarantee = result.guarantee;
  r.achieved_ratio = result.achieved_ratio;
  r.meets_guarantee = result.meets_guarantee;
  r.conforming = result.conforming;
  r.branch = std::string(branch_name(result.branch));
  r.sampler_accepted = result.sampler_accepted;
  r.removed_a_edges = result.removed_a_edges;
  r.local_search_gain = result.local_search_gain;
  r.branch_trace = result.trace;
  return r;
}

json to_json(const RunReport& r) {
  json trace = json::array();
  for (const TraceEntry& t : r.branch_trace) trace.push_back({{"name", t.name}, {"value", t.value}});
  json j = {
      {"schema_version", r.schema_version},
      {"instance",
       {{"descriptor", r.instance.descriptor},
        {"hash", r.instance.hash},
        {"n", r.instance.n},
        {"m", r.instance.m}}},
      {"config",
       {{"d", r.config.d},
        {"epsilon", r.config.epsilon},
        {"large_degree_exponent", r.config.large_degree_exponent},
        {"seed", r.config.seed},
        {"max_attempts", r.config.max_attempts},
        {"local_search", r.config.local_search},
        {"test_constants", r.config.test_constants}}},
      {"partition", r.sides},
      {"stats", {{"e12", r.stats.e12}, {"e21", r.stats.e21}, {"min_cut", r.stats.min_cut()}}},
      {"guarantee", r.guarantee},
      {"achieved_ratio", r.achieved_ratio},
      {"meets_guarantee", r.meets_guarantee},
      {"conforming", r.conforming},
      {"branch", r.branch},
      {"sampler_accepted", r.sampler_accepted},
      {"removed_a_edges", r.removed_a_edges},
      {"local_search_gain", r.local_search_gain},
      {"branch_trace", trace},
  };
  if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
  if (r.oracle) j["oracle"] = {{"optimum", r.oracle->optimum}, {"ratio", r.oracle->ratio}};
  if (r.error) j["error"] = *r.error;
  return j;
}

RunReport report_from_json(const json& j) {
  try {
    RunReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw InputError("unsupported schema_version " + std::to_string(r.schema_version));
    }
    const json& inst = j.at("instance");
    r.instance = {inst.at("descriptor").get<std::string>(), inst.at("hash").get<std::string>(),
                  inst.at("n").get<std::int64_t>(), inst.at("m").get<std::int64_t>()};
    const json& c = j.at("config");
    r.config.d = c.at("d").get<std::int32_t>();
    r.config.epsilon = c.at("epsilon").get<double>();
    r.config.large_degree_exponent = c.at("large_degree_exponent").get<double>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.max_attempts = c.at("max_attempts").get<std::int32_t>();
    r.config.local_search = c.at("local_search").get<bool>();
    r.config.test_constants = c.at("test_constants").get<bool>();
    r.sides = j.at("partition").get<std::string>();
    r.stats = {j.at("stats").at("e12").get<std::int64_t>(),
               j.at("stats").at("e21").get<std::int64_t>()};
    r.guarantee = j.at("guarantee").get<double>();
    r.achieved_ratio = j.at("achieved_ratio").get<double>();
    r.meets_guarantee = j.at("meets_guarantee").get<bool>();
    r.conforming = j.at("conforming").get<bool>();
    r.branch = j.at("branch").get<std::string>();
    r.sampler_accepted = j.at("sampler_accepted").get<bool>();
    r.removed_a_edges = j.at("removed_a_edges").get<std::int64_t>();
    r.local_search_gain = j.at("local_search_gain").get<std::int64_t>();
    for (const json& t : j.at("branch_trace")) {
      r.branch_trace.push_back({t.at("name").get<std::string>(), t.at("value").get<std::string>()});
    }
    if (j.contains("timings_ms")) r.timings_ms = j["timings_ms"].get<std::map<std::string, double>>();
    if (j.contains("oracle")) {
      r.oracle = OracleComparison{j["oracle"].at("optimum").get<std::int64_t>(),
                                  j["oracle"].at("ratio").get<double>()};
    }
    if (j.contains("error")) r.error = j["error"].get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace judicious

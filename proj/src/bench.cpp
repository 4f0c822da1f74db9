#include <atomic>
#include <chrono>
#include <thread>

#include "judicious/harness.hpp"
#include "judicious/oracle.hpp"

namespace judicious {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

PipelineConfig config_for(std::int32_t d, std::uint64_t seed) {
  PipelineConfig config;
  config.d = d;
  config.epsilon = 0.05;
  config.seed = seed;
  return config;
}

SuiteEntry entry(GadgetSpec spec, std::int32_t d, std::uint64_t seed = 1, bool oracle = false) {
  return {spec, config_for(d, seed), oracle};
}

GadgetSpec sized(Family family, std::int32_t n, std::optional<std::int32_t> pad = {}) {
  GadgetSpec spec;
  spec.family = family;
  spec.n = n;
  spec.pad_out_degree = pad;
  return spec;
}

GadgetSpec lower_bound(std::int32_t d, std::int32_t k) {
  GadgetSpec spec;
  spec.family = Family::lower_bound;
  spec.d = d;
  spec.k = k;
  return spec;
}

GadgetSpec eulerian(std::int32_t q) {
  GadgetSpec spec;
  spec.family = Family::eulerian_complete;
  spec.q = q;
  return spec;
}

GadgetSpec random_spec(std::int32_t n, std::int32_t d, double extra, std::uint64_t seed) {
  GadgetSpec spec;
  spec.family = Family::random_min_outdeg;
  spec.n = n;
  spec.d = d;
  spec.extra = extra;
  spec.seed = seed;
  return spec;
}

std::vector<SuiteEntry> gadgets() {
  std::vector<SuiteEntry> out;
  for (std::int32_t k : {1, 5, 50, 200, 400}) out.push_back(entry(lower_bound(2, k), 2));
  for (std::int32_t k : {1, 5, 50, 200, 300}) out.push_back(entry(lower_bound(3, k), 3));
  for (std::int32_t q : {5, 7, 9, 21}) out.push_back(entry(eulerian(q), 2));
  for (std::int32_t q : {7, 9, 21}) out.push_back(entry(eulerian(q), 3));
  for (std::int32_t n : {20, 200}) out.push_back(entry(sized(Family::d1_star_triangle, n, 2), 2));
  for (std::int32_t n : {50, 1000}) {
    out.push_back(entry(sized(Family::k33_oriented, n, 3), 3));
    out.push_back(entry(sized(Family::k33_plus_3regular, n, 3), 3));
    out.push_back(entry(sized(Family::k55_mixed, n, 3), 3));
  }
  return out;
}

std::vector<SuiteEntry> random_suite(std::int32_t d) {
  std::vector<SuiteEntry> out;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto n = static_cast<std::int32_t>(500 + 225 * i);
    const double extra = static_cast<double>(i % 4) * 0.5;
    out.push_back(entry(random_spec(n, d, extra, 1000 * static_cast<std::uint64_t>(d) + i), d, i + 1));
  }
  return out;
}

std::vector<SuiteEntry> oracle_small() {
  std::vector<SuiteEntry> out;
  out.push_back(entry(eulerian(5), 2, 1, true));
  for (std::int32_t q : {7, 9, 11, 13, 15}) {
    out.push_back(entry(eulerian(q), 2, 1, true));
    out.push_back(entry(eulerian(q), 3, 1, true));
  }
  for (std::int32_t k : {1, 2, 3}) out.push_back(entry(lower_bound(2, k), 2, 1, true));
  out.push_back(entry(lower_bound(3, 1), 3, 1, true));
  for (std::int32_t n : {8, 12, 16}) {
    out.push_back(entry(sized(Family::d1_star_triangle, n, 2), 2, 1, true));
    out.push_back(entry(sized(Family::k33_oriented, n, 3), 3, 1, true));
    out.push_back(entry(sized(Family::k33_plus_3regular, n, 3), 3, 1, true));
    out.push_back(entry(sized(Family::k55_mixed, n, 3), 3, 1, true));
  }
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto n = static_cast<std::int32_t>(8 + i % 9);
    const std::int32_t d = i % 2 == 0 ? 2 : 3;
    const double extra = static_cast<double>(i % 3) * 0.5;
    out.push_back(entry(random_spec(n, d, extra, 77 + i), d, i + 1, true));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"gadgets", "random-d2", "random-d3", "oracle-small"};
}

std::vector<SuiteEntry> suite(std::string_view name) {
  if (name == "gadgets") return gadgets();
  if (name == "random-d2") return random_suite(2);
  if (name == "random-d3") return random_suite(3);
  if (name == "oracle-small") return oracle_small();
  throw InputError("unknown suite `" + std::string(name) + "`");
}

RunReport run_entry(const SuiteEntry& entry, bool timings) {
  auto start = Clock::now();
  const Digraph graph = generate(entry.spec);
  const InstanceInfo info{describe(entry.spec), graph_hash(graph), graph.vertex_count(),
                          graph.edge_count()};
  const double gen_ms = elapsed_ms(start);
  RunReport report;
  start = Clock::now();
  try {
    report = make_report(info, entry.config, run_pipeline(graph, entry.config));
  } catch (const StructuralError& e) {
    report.instance = info;
    report.config = entry.config;
    report.error = std::string("structural: ") + e.what();
  } catch (const InputError& e) {
    report.instance = info;
    report.config = entry.config;
    report.error = std::string("input: ") + e.what();
  }
  const double pipeline_ms = elapsed_ms(start);
  if (entry.compare_oracle) {
    start = Clock::now();
    const OracleResult oracle = exact_judicious(graph);
    const std::int64_t got = report.stats.min_cut();
    report.oracle = OracleComparison{
        oracle.optimum, oracle.optimum == 0 ? 1.0
                                            : static_cast<double>(got) /
                                                  static_cast<double>(oracle.optimum)};
    if (timings) report.timings_ms["oracle"] = elapsed_ms(start);
  }
  if (timings) {
    report.timings_ms["generate"] = gen_ms;
    report.timings_ms["pipeline"] = pipeline_ms;
  }
  return report;
}

std::vector<RunReport> run_suite(const std::vector<SuiteEntry>& entries, unsigned jobs,
                                 bool timings) {
  std::vector<RunReport> reports(entries.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      reports[i] = run_entry(entries[i], timings);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace judicious

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "judicious/decomposition.hpp"
#include "judicious/harness.hpp"
#include "judicious/oracle.hpp"

namespace judicious {

namespace {

using nlohmann::json;

struct Options {
  // gen
  std::string family;
  GadgetSpec spec;
  std::int32_t pad = 0;
  std::string output;
  // shared
  std::string input;
  std::string partition_file;
  bool as_json = false;
  bool timings = false;
  // partition
  PipelineConfig config;
  bool no_local_search = false;
  bool strict = false;
  // oracle
  unsigned threads = 1;
  // decompose
  bool antiparallel = false;
  // bench
  std::string suite_name;
  unsigned jobs = 1;
};

json stats_json(const CutStats& s) {
  return {{"e12", s.e12}, {"e21", s.e21}, {"min_cut", s.min_cut()}};
}

int cmd_gen(Options& o, std::ostream& out) {
  o.spec.family = parse_family(o.family);
  if (o.pad > 0) o.spec.pad_out_degree = o.pad;
  const Digraph graph = generate(o.spec);
  if (o.output.empty() || o.output == "-") {
    out << "# " << describe(o.spec) << '\n';
    write_edge_list(out, graph);
    return 0;
  }
  std::ofstream file(o.output);
  if (!file) throw InputError("cannot write " + o.output);
  file << "# " << describe(o.spec) << '\n';
  write_edge_list(file, graph);
  return 0;
}

int cmd_partition(Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Digraph graph = read_edge_list_file(o.input);
  const auto loaded = std::chrono::steady_clock::now();
  o.config.local_search = !o.no_local_search;
  const PartitionResult result = run_pipeline(graph, o.config);
  const auto done = std::chrono::steady_clock::now();
  RunReport report = make_report(
      {o.input, graph_hash(graph), graph.vertex_count(), graph.edge_count()}, o.config, result);
  if (o.timings) {
    report.timings_ms["load"] = std::chrono::duration<double, std::milli>(loaded - start).count();
    report.timings_ms["pipeline"] = std::chrono::duration<double, std::milli>(done - loaded).count();
  }
  if (!o.partition_file.empty()) {
    std::ofstream file(o.partition_file);
    if (!file) throw InputError("cannot write " + o.partition_file);
    write_partition(file, result.partition);
  }
  if (o.as_json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "n=" << graph.vertex_count() << " m=" << graph.edge_count() << '\n'
        << "e12=" << result.stats.e12 << " e21=" << result.stats.e21
        << " min_cut=" << result.stats.min_cut() << '\n'
        << "guarantee=" << result.guarantee
        << " meets_guarantee=" << (result.meets_guarantee ? "yes" : "no") << '\n'
        << "branch=" << branch_name(result.branch) << '\n';
    for (const TraceEntry& t : result.trace) out << "  " << t.name << ": " << t.value << '\n';
    if (!result.conforming) out << "NON-CONFORMING (test constants)\n";
  }
  return o.strict && !result.meets_guarantee ? 2 : 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Digraph graph = read_edge_list_file(o.input);
  const OracleResult r = exact_judicious(graph, o.threads);
  const std::string sides = partition_to_sides(r.witness);
  if (o.as_json) {
    out << json{{"optimum", r.optimum},
                {"witness", sides},
                {"evaluated", r.evaluated},
                {"stats", stats_json(graph.vertex_count() ? cut_stats(graph, r.witness)
                                                          : CutStats{})}}
               .dump(2)
        << '\n';
  } else {
    out << "optimum=" << r.optimum << " evaluated=" << r.evaluated << '\n'
        << "witness=" << sides << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Digraph graph = read_edge_list_file(o.input);
  std::vector<Vertex> all(static_cast<std::size_t>(graph.vertex_count()));
  for (Vertex v = 0; v < graph.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  const StarDecomposition dec =
      star_decompose(graph, all, default_degree_cap(graph, o.config.epsilon), o.antiparallel);
  if (o.as_json) {
    json stars = json::array();
    for (const Star& s : dec.stars) {
      stars.push_back({{"apex", s.apex},
                       {"seed", {s.seed.tail, s.seed.head}},
                       {"leaves", s.leaves}});
    }
    out << json{{"stars", stars},
                {"leftover", dec.leftover},
                {"tau", dec.tau},
                {"tight_count", dec.tight_count},
                {"sigma", dec.sigma},
                {"tau_prime", dec.tau_prime},
                {"degree_cap", dec.degree_cap},
                {"antiparallel_seeded", dec.antiparallel_seeded}}
               .dump(2)
        << '\n';
  } else {
    out << "stars=" << dec.stars.size() << " leftover=" << dec.leftover.size()
        << " tau=" << dec.tau << " tight=" << dec.tight_count << " sigma=" << dec.sigma
        << " tau_prime=" << dec.tau_prime << " cap=" << dec.degree_cap << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Digraph graph = read_edge_list_file(o.input);
  const Bipartition partition = read_partition_file(o.partition_file, graph.vertex_count());
  const CutStats stats = cut_stats(graph, partition);
  if (o.as_json) {
    out << stats_json(stats).dump(2) << '\n';
  } else {
    out << "e12=" << stats.e12 << " e21=" << stats.e21 << " min_cut=" << stats.min_cut() << '\n';
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const std::vector<RunReport> reports = run_suite(suite(o.suite_name), o.jobs, o.timings);
  bool structural = false;
  bool unmet = false;
  for (const RunReport& r : reports) {
    if (r.error && r.error->starts_with("structural")) structural = true;
    if (!r.error && !r.meets_guarantee) unmet = true;
  }
  if (o.as_json) {
    json all = json::array();
    for (const RunReport& r : reports) all.push_back(to_json(r));
    out << json{{"schema_version", kSchemaVersion}, {"suite", o.suite_name}, {"reports", all}}
               .dump(2)
        << '\n';
  } else {
    for (const RunReport& r : reports) {
      out << r.instance.descriptor << " n=" << r.instance.n << " m=" << r.instance.m;
      if (r.error) {
        out << " ERROR " << *r.error << '\n';
        continue;
      }
      out << " min_cut=" << r.stats.min_cut() << " ratio=" << r.achieved_ratio
          << " branch=" << r.branch << " meets=" << (r.meets_guarantee ? "yes" : "no");
      if (r.oracle) out << " oracle=" << r.oracle->optimum;
      out << '\n';
    }
  }
  if (structural) return 3;
  return o.strict && unmet ? 2 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Judicious bipartitions of digraphs with bounded minimum out-degree"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
  gen->add_option("family", o.family, "d1 | eulerian | lower_bound | k33 | k33_plus | k55 | random")
      ->required();
  gen->add_option("--d", o.spec.d, "Minimum out-degree parameter");
  gen->add_option("--k", o.spec.k, "Gadget copy count");
  gen->add_option("--n", o.spec.n, "Vertex count");
  gen->add_option("--q", o.spec.q, "Order of the complete graph");
  gen->add_option("--seed", o.spec.seed, "Random seed");
  gen->add_option("--extra", o.spec.extra, "Extra random edges per vertex");
  gen->add_option("--pad", o.pad, "Raise every out-degree to at least this value");
  gen->add_option("-o,--output", o.output, "Output file (stdout if omitted)");

  auto* part = app.add_subcommand("partition", "Run the partition pipeline");
  part->add_option("-i,--input", o.input, "Edge list")->required();
  part->add_option("--d", o.config.d, "2 or 3")->required();
  part->add_option("--epsilon", o.config.epsilon, "Tolerance in (0, 1/4)");
  part->add_option("--seed", o.config.seed, "Sampler seed");
  part->add_option("--max-attempts", o.config.max_attempts, "Sampler retry budget");
  part->add_flag("--no-local-search", o.no_local_search, "Skip the final local search");
  part->add_flag("--test-constants", o.config.test_constants,
                 "Scale the dense cutoff down by 100 (marks the run non-conforming)");
  part->add_option("-p,--partition-out", o.partition_file, "Write the partition here");
  part->add_flag("--json", o.as_json, "Print a JSON report");
  part->add_flag("--timings", o.timings, "Include wall-clock timings in the report");
  part->add_flag("--strict", o.strict, "Exit 2 if the guarantee is not met");

  auto* orc = app.add_subcommand("oracle", "Exhaustive optimum (n <= 24)");
  orc->add_option("-i,--input", o.input, "Edge list")->required();
  orc->add_option("--threads", o.threads, "Worker threads");
  orc->add_flag("--json", o.as_json, "Print JSON");

  auto* dec = app.add_subcommand("decompose", "Star decomposition of the whole vertex set");
  dec->add_option("-i,--input", o.input, "Edge list")->required();
  dec->add_option("--epsilon", o.config.epsilon, "Degree cap is 2(m/n)/epsilon");
  dec->add_flag("--antiparallel", o.antiparallel, "Seed triangle components on antiparallel pairs");
  dec->add_flag("--json", o.as_json, "Print JSON");

  auto* ver = app.add_subcommand("verify", "Recompute cut statistics of a partition file");
  ver->add_option("-i,--input", o.input, "Edge list")->required();
  ver->add_option("-p,--partition", o.partition_file, "Partition file")->required();
  ver->add_flag("--json", o.as_json, "Print JSON");

  auto* bench = app.add_subcommand("bench", "Run a built-in suite");
  bench->add_option("--suite", o.suite_name, "gadgets | random-d2 | random-d3 | oracle-small")
      ->required();
  bench->add_option("--jobs", o.jobs, "Parallel instances");
  bench->add_flag("--json", o.as_json, "Print JSON");
  bench->add_flag("--timings", o.timings, "Include wall-clock timings");
  bench->add_flag("--strict", o.strict, "Exit 2 if any guarantee is not met");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*part) return cmd_partition(o, out);
    if (*orc) return cmd_oracle(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

}  // namespace judicious

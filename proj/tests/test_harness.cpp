#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "judicious/harness.hpp"

using namespace judicious;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "judicious");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("judicious_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(EdgeList, RoundTripWithComments) {
  std::istringstream in("# a comment\n3 3\n0 1\n\n  # another\n1 2\n2 0\n");
  const Digraph g = read_edge_list(in);
  EXPECT_EQ(g.edge_count(), 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream again(out.str());
  const Digraph h = read_edge_list(again);
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
}

TEST(EdgeList, Errors) {
  const auto fails = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in), InputError) << text;
  };
  fails("");
  fails("3\n");
  fails("3 2\n0 1\n");
  fails("3 1\n0 1\n1 2\n");
  fails("3 1\n0 5\n");
  fails("3 1\n0 x\n");
  fails("3 2\n0 1\n0 1\n");
  fails("3 1\n1 1\n");
}

TEST(PartitionFile, RoundTripAndErrors) {
  Bipartition p(4);
  p.assign(2, Side::second);
  std::ostringstream out;
  write_partition(out, p);
  std::istringstream in(out.str());
  EXPECT_EQ(read_partition(in, 4), p);
  std::istringstream missing("0 1\n1 2\n");
  EXPECT_THROW(read_partition(missing, 3), InputError);
  std::istringstream bad_side("0 3\n");
  EXPECT_THROW(read_partition(bad_side, 1), InputError);
  std::istringstream twice("0 1\n0 2\n");
  EXPECT_THROW(read_partition(twice, 1), InputError);
}

TEST(Hash, StableAndSensitive) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_NE(graph_hash(generate({})), "");
  GadgetSpec a;
  a.q = 5;
  GadgetSpec b;
  b.q = 7;
  EXPECT_NE(graph_hash(generate(a)), graph_hash(generate(b)));
}

TEST(Report, JsonRoundTrip) {
  SuiteEntry entry;
  entry.spec.family = Family::lower_bound;
  entry.spec.d = 2;
  entry.spec.k = 5;
  entry.config.d = 2;
  entry.compare_oracle = true;
  RunReport r = run_entry(entry, true);
  EXPECT_TRUE(r.oracle.has_value());
  EXPECT_FALSE(r.timings_ms.empty());
  const RunReport back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
  EXPECT_EQ(back, r);
  EXPECT_EQ(to_json(back), to_json(r));
  auto j = to_json(r);
  j["schema_version"] = 2;
  EXPECT_THROW(report_from_json(j), InputError);
  j.erase("schema_version");
  EXPECT_THROW(report_from_json(j), InputError);
}

TEST(Bench, SuitesExistAndJobsAreDeterministic) {
  for (const std::string& name : suite_names()) EXPECT_FALSE(suite(name).empty());
  EXPECT_THROW(suite("nope"), InputError);
  const auto entries = suite("gadgets");
  const auto one = run_suite(entries, 1);
  const auto four = run_suite(entries, 4);
  ASSERT_EQ(one.size(), entries.size());
  EXPECT_EQ(one, four);
  for (const RunReport& r : one) EXPECT_FALSE(r.error.has_value()) << r.instance.descriptor;
}

TEST(Cli, GenOraclePartitionVerify) {
  TempDir dir;
  const std::string graph = dir.file("g.el");
  const std::string part = dir.file("p.txt");
  ASSERT_EQ(cli({"gen", "lower_bound", "--d", "2", "--k", "1", "-o", graph}).code, 0);

  const CliRun oracle = cli({"oracle", "-i", graph, "--json"});
  ASSERT_EQ(oracle.code, 0);
  EXPECT_EQ(nlohmann::json::parse(oracle.out)["optimum"], 4);

  const CliRun run =
      cli({"partition", "-i", graph, "--d", "2", "--epsilon", "0.05", "--seed", "1", "--json",
           "-p", part});
  ASSERT_EQ(run.code, 0) << run.err;
  const RunReport report = report_from_json(nlohmann::json::parse(run.out));
  EXPECT_FALSE(report.branch_trace.empty());
  EXPECT_TRUE(report.timings_ms.empty());

  const CliRun verify = cli({"verify", "-i", graph, "-p", part, "--json"});
  ASSERT_EQ(verify.code, 0);
  const auto stats = nlohmann::json::parse(verify.out);
  EXPECT_EQ(stats["e12"], report.stats.e12);
  EXPECT_EQ(stats["e21"], report.stats.e21);

  EXPECT_EQ(cli({"decompose", "-i", graph, "--json"}).code, 0);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const std::string graph = dir.file("d1.el");
  ASSERT_EQ(cli({"gen", "d1", "--n", "8", "-o", graph}).code, 0);
  EXPECT_EQ(cli({"partition", "-i", graph, "--d", "2"}).code, 1);  // out-degree 1
  EXPECT_EQ(cli({"partition", "-i", dir.file("missing.el"), "--d", "2"}).code, 1);
  EXPECT_EQ(cli({"gen", "unknown-family"}).code, 1);
  EXPECT_EQ(cli({"bogus"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);

  // --strict maps an unmet guarantee to exit 2 and is otherwise silent.
  const std::string lb = dir.file("lb.el");
  ASSERT_EQ(cli({"gen", "lower_bound", "--d", "2", "--k", "3", "-o", lb}).code, 0);
  const CliRun strict =
      cli({"partition", "-i", lb, "--d", "2", "--epsilon", "0.0001", "--strict"});
  const CliRun loose = cli({"partition", "-i", lb, "--d", "2", "--epsilon", "0.0001"});
  EXPECT_EQ(loose.code, 0);
  EXPECT_EQ(strict.code, loose.out.find("meets_guarantee=yes") != std::string::npos ? 0 : 2);
}

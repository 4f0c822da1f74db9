#include "judicious/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "judicious/decomposition.hpp"
#include "judicious/samplers.hpp"

namespace judicious {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

class Trace {
 public:
  void add(std::string name, std::string value) {
    entries_.push_back({std::move(name), std::move(value)});
  }
  void add(std::string name, std::int64_t value) { add(std::move(name), std::to_string(value)); }
  void add(std::string name, double value) { add(std::move(name), format_double(value)); }
  void add(std::string name, bool value) { add(std::move(name), std::string(value ? "yes" : "no")); }
  void add(std::string name, const char* value) { add(std::move(name), std::string(value)); }

  std::vector<TraceEntry> take() { return std::move(entries_); }

 private:
  std::vector<TraceEntry> entries_;
};

// Side that makes v's surplus count toward the forward direction.
Side forward_side(const LargeVertex& v) { return v.out_surplus() >= 0 ? Side::first : Side::second; }

GapPartition assemble(std::span<const LargeVertex> large, const std::vector<Side>& sides) {
  GapPartition gap;
  for (std::size_t i = 0; i < large.size(); ++i) {
    const LargeVertex& v = large[i];
    if (sides[i] == Side::first) {
      gap.first.push_back(v.id);
      gap.forward += v.out;
      gap.backward += v.in;
    } else {
      gap.second.push_back(v.id);
      gap.forward += v.in;
      gap.backward += v.out;
    }
  }
  gap.theta = gap.forward - gap.backward;
  return gap;
}

struct Sampled {
  Bipartition partition;
  bool accepted = false;
  std::int32_t attempts = 0;
  bool precondition = true;
};

Sampled from_outcome(const SampleOutcome& outcome) {
  return {outcome.partition, outcome.accepted, outcome.attempts_used, outcome.precondition_met};
}

void validate_config(const PipelineConfig& config) {
  if (config.d != 2 && config.d != 3) {
    throw InputError("d must be 2 or 3, got " + std::to_string(config.d));
  }
  if (!(config.epsilon > 0.0 && config.epsilon < 0.25)) {
    throw InputError("epsilon must lie in (0, 1/4)");
  }
  if (!(config.large_degree_exponent > 0.0)) throw InputError("exponent must be positive");
  if (config.max_attempts < 1) throw InputError("max_attempts must be at least 1");
}

void require_min_out_degree(const Digraph& graph, std::int32_t d) {
  if (graph.vertex_count() == 0) throw InputError("empty digraph");
  const Vertex v = min_out_degree_vertex(graph);
  if (graph.out_degree(v) < d) {
    throw InputError("vertex " + std::to_string(v) + " has out-degree " +
                         std::to_string(graph.out_degree(v)) + " < " + std::to_string(d),
                     v);
  }
}

std::string structural_message(const std::string& what, const SurplusProfile& profile,
                               std::int64_t theta) {
  std::string msg = what + " (theta=" + std::to_string(theta) + ", g=" +
                    std::to_string(profile.g) + ", b=" + std::to_string(profile.b) + ", huge=[";
  for (std::size_t i = 0; i < profile.huge.size(); ++i) {
    if (i) msg += ", ";
    msg += std::to_string(profile.huge[i]) + ":" + std::to_string(profile.deltas[i]);
  }
  msg += "], surpluses=[";
  for (std::size_t i = 0; i < profile.entries.size(); ++i) {
    if (i) msg += ", ";
    msg += std::to_string(profile.entries[i].id) + ":" +
           std::to_string(profile.entries[i].out_surplus);
  }
  return msg + "])";
}

PartitionResult run(const Digraph& graph, const PipelineConfig& config) {
  validate_config(config);
  require_min_out_degree(graph, config.d);
  const std::int32_t d = config.d;
  const Vertex n = graph.vertex_count();
  const std::int64_t m = graph.edge_count();
  const double eps = config.epsilon;
  Trace trace;
  trace.add("d", static_cast<std::int64_t>(d));
  trace.add("n", static_cast<std::int64_t>(n));
  trace.add("m", m);
  trace.add("epsilon", eps);
  if (config.test_constants) trace.add("conforming", "no (test constants)");

  PartitionResult result;
  result.conforming = !config.test_constants;
  Sampled sampled;

  const double threshold = config.dense_threshold();
  trace.add("dense_threshold", threshold);
  const bool dense = static_cast<double>(m) >= threshold * static_cast<double>(n);
  trace.add("dense", dense);

  if (dense) {
    const double dense_eps = d == 2 ? 1.0 / 12.0 : 1.0 / 20.0;
    result.branch = Branch::dense;
    sampled = from_outcome(quarter_partition(graph, dense_eps, config.seed, config.max_attempts));
  } else {
    LargeSplit split = split_large(graph, config.large_degree_exponent);
    result.removed_a_edges = split.removed;
    const std::vector<LargeVertex> large = large_vertex_degrees(split.stripped, split.large);
    const GapPartition gap = min_gap(large);
    const std::int64_t ms = split.stripped.edge_count();
    const std::int64_t nb = static_cast<std::int64_t>(split.rest.size());
    trace.add("large_vertices", static_cast<std::int64_t>(split.large.size()));
    trace.add("removed_a_edges", split.removed);
    trace.add("theta", gap.theta);
    if (gap.forward - gap.backward != gap.theta) throw StructuralError("gap identity failed");

    // Diagnostic only: the degree condition of the bisection theorem.
    const double c = static_cast<double>(m) / static_cast<double>(n);
    const double gamma = std::pow(eps, 4) / (1024.0 * c * c * c);
    std::int64_t b_max_degree = 0;
    for (Vertex v : split.rest) b_max_degree = std::max(b_max_degree, graph.degree(v));
    trace.add("gamma", gamma);
    trace.add("gamma_condition",
              static_cast<double>(split.large.size()) <= gamma * n &&
                  static_cast<double>(b_max_degree) <= gamma * n);

    FixedSides fixed{gap.first, gap.second};
    SamplerConfig sc;
    sc.epsilon = eps / 2.0;
    sc.seed = config.seed;
    sc.max_attempts = config.max_attempts;

    if (ms == 0) {
      // Every edge lies inside A; nothing is left to sample against.
      result.branch = Branch::small_gap;
      trace.add("branch", "degenerate (no edges outside A)");
      sampled = from_outcome(quarter_partition(graph, eps, config.seed, config.max_attempts));
    } else if (gap.theta * (2 * d - 1) <= ms) {
      result.branch = Branch::small_gap;
      trace.add("theta_vs_bound", d == 2 ? "theta <= m/3" : "theta <= m/5");
      sampled = from_outcome(second_moment_partition(split.stripped, fixed, sc));
    } else {
      trace.add("theta_vs_bound", d == 2 ? "theta > m/3" : "theta > m/5");
      const SurplusProfile profile = surplus_profile(large, gap.theta);
      const auto huge_count = static_cast<std::int64_t>(profile.huge.size());
      trace.add("huge_count", huge_count);
      trace.add("b", profile.b);
      trace.add("g", profile.g);
      if (ms < profile.b + d * nb) {
        throw StructuralError(structural_message(
            "edge count below b + " + std::to_string(d) + "|B|", profile, gap.theta));
      }

      // Forward contributors with positive surplus under the min-gap split.
      std::vector<const LargeVertex*> forward;
      std::int64_t backward_sum = 0;
      for (std::size_t i = 0; i < large.size(); ++i) {
        const LargeVertex& v = large[i];
        if (v.surplus() == 0) continue;
        const bool in_first =
            std::find(gap.first.begin(), gap.first.end(), v.id) != gap.first.end();
        const Side side = in_first ? Side::first : Side::second;
        if (side == forward_side(v)) forward.push_back(&v);
        else backward_sum += v.surplus();
      }

      const auto bisect = [&](bool antiparallel, const StarDecomposition*& out,
                              StarDecomposition& storage) {
        const double cap = default_degree_cap(split.stripped, eps / 4.0);
        storage = star_decompose(split.stripped, split.rest, cap, antiparallel);
        out = &storage;
        trace.add("tau", storage.tau);
        trace.add("tau_prime", storage.tau_prime);
        trace.add("leftover", static_cast<std::int64_t>(storage.leftover.size()));
        return from_outcome(
            star_bisection(split.stripped, fixed, storage, eps / 4.0, config.seed,
                           config.max_attempts));
      };

      if (d == 2 || huge_count == 1) {
        if (d == 2 && forward.size() != 1) {
          throw StructuralError(structural_message(
              "expected exactly one forward vertex of positive surplus", profile, gap.theta));
        }
        if (d == 3 && forward.size() != 1) {
          throw StructuralError(structural_message(
              "one huge vertex but several forward vertices", profile, gap.theta));
        }
        const std::int64_t delta = forward.front()->surplus();
        if (backward_sum != delta - gap.theta || gap.theta > delta) {
          throw StructuralError(
              structural_message("backward surpluses do not sum to delta - theta", profile,
                                 gap.theta));
        }
        trace.add("delta", delta);
        result.branch = Branch::star_bisection;
        StarDecomposition storage;
        const StarDecomposition* decomposition = nullptr;
        sampled = bisect(d == 3, decomposition, storage);
        const std::int64_t odd = d == 2 ? decomposition->tau : decomposition->tau_prime;
        const std::int64_t bound = n + 2 * (delta - gap.theta + profile.b);
        if (odd * (2 * d - 1) > bound) {
          throw StructuralError(structural_message(
              std::string(d == 2 ? "odd" : "tight") + " component count " +
                  std::to_string(odd) + " exceeds bound",
              profile, gap.theta));
        }
      } else if (huge_count == 3) {
        const std::int64_t d1 = profile.deltas[0];
        const std::int64_t d2 = profile.deltas[1];
        const std::int64_t d3 = profile.deltas[2];
        const bool case1 = 2 * d1 - d2 - d3 - profile.g > 0;
        trace.add("case", case1 ? "1 (X,Y)=(0,g)" : "2 (X,Y)=(g,0)");
        result.branch = Branch::three_huge;
        FixedSides placed;
        const LargeVertex* v1 = nullptr;
        for (const LargeVertex& v : large) {
          const auto it = std::find(profile.huge.begin(), profile.huge.end(), v.id);
          bool make_forward;
          if (it == profile.huge.begin()) {
            make_forward = true;
            v1 = &v;
          } else if (it != profile.huge.end()) {
            make_forward = false;
          } else {
            make_forward = !case1;
          }
          const Side side =
              v.surplus() == 0 ? Side::first
                               : (make_forward ? forward_side(v) : opposite(forward_side(v)));
          (side == Side::first ? placed.first : placed.second).push_back(v.id);
        }
        const bool v1_out = v1->out_surplus() > 0;
        sc.p = v1_out ? Rational{2, 5} : Rational{3, 5};
        trace.add("p", v1_out ? "2/5" : "3/5");
        sampled = from_outcome(second_moment_partition(split.stripped, placed, sc));
      } else {
        throw StructuralError(structural_message(
            "huge vertex count " + std::to_string(huge_count) + " is not 1 or 3", profile,
            gap.theta));
      }
    }
  }

  trace.add("branch_taken", std::string(branch_name(result.branch)));
  trace.add("sampler_accepted", sampled.accepted);
  trace.add("sampler_attempts", static_cast<std::int64_t>(sampled.attempts));
  trace.add("sampler_precondition", sampled.precondition);
  result.sampler_accepted = sampled.accepted;

  Bipartition partition = std::move(sampled.partition);
  const std::int64_t before = cut_stats(graph, partition).min_cut();
  if (config.local_search) {
    partition = local_search(graph, std::move(partition));
  }
  result.partition = std::move(partition);
  result.stats = cut_stats(graph, result.partition);
  result.local_search_gain = result.stats.min_cut() - before;
  trace.add("local_search_delta", result.local_search_gain);
  result.guarantee = guarantee_target(d, m, eps);
  result.achieved_ratio = static_cast<double>(result.stats.min_cut()) / static_cast<double>(m);
  result.meets_guarantee = static_cast<double>(result.stats.min_cut()) >= result.guarantee;
  trace.add("min_cut", result.stats.min_cut());
  trace.add("meets_guarantee", result.meets_guarantee);
  result.trace = trace.take();
  return result;
}

}  // namespace

std::vector<LargeVertex> large_vertices_from_surpluses(std::span<const std::int64_t> surpluses) {
  std::vector<LargeVertex> out;
  out.reserve(surpluses.size());
  for (std::size_t i = 0; i < surpluses.size(); ++i) {
    const std::int64_t s = surpluses[i];
    out.push_back({static_cast<Vertex>(i), s > 0 ? s : 0, s < 0 ? -s : 0});
  }
  return out;
}

LargeSplit split_large(const Digraph& graph, double exponent) {
  const Vertex n = graph.vertex_count();
  const double threshold = std::pow(static_cast<double>(n), exponent);
  LargeSplit split;
  std::vector<char> is_large(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(graph.degree(v)) >= threshold) {
      split.large.push_back(v);
      is_large[static_cast<std::size_t>(v)] = 1;
    } else {
      split.rest.push_back(v);
    }
  }
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(graph.edge_count()));
  for (const Edge& e : graph.edges()) {
    if (is_large[static_cast<std::size_t>(e.tail)] && is_large[static_cast<std::size_t>(e.head)]) {
      ++split.removed;
    } else {
      kept.push_back(e);
    }
  }
  split.stripped = Digraph::from_edge_list(n, kept);
  return split;
}

std::vector<LargeVertex> large_vertex_degrees(const Digraph& stripped,
                                              std::span<const Vertex> large) {
  std::vector<LargeVertex> out;
  out.reserve(large.size());
  for (Vertex v : large) out.push_back({v, stripped.out_degree(v), stripped.in_degree(v)});
  return out;
}

GapPartition greedy_gap(std::span<const LargeVertex> large) {
  std::vector<Side> sides;
  sides.reserve(large.size());
  std::int64_t running = 0;
  for (const LargeVertex& v : large) {
    if (v.surplus() == 0) {
      sides.push_back(Side::first);
      continue;
    }
    const bool positive = running <= 0;
    const Side side = positive ? forward_side(v) : opposite(forward_side(v));
    sides.push_back(side);
    running += positive ? v.surplus() : -v.surplus();
  }
  return assemble(large, sides);
}

GapPartition min_gap(std::span<const LargeVertex> large) {
  std::int64_t total = 0;
  for (const LargeVertex& v : large) total += v.surplus();
  // reach[s]: index of the item that first made sum s reachable; -1 if none.
  std::vector<std::int32_t> reach(static_cast<std::size_t>(total) + 1, -1);
  constexpr std::int32_t kEmpty = -2;
  reach[0] = kEmpty;
  for (std::size_t i = 0; i < large.size(); ++i) {
    const std::int64_t s = large[i].surplus();
    if (s == 0) continue;
    for (std::int64_t x = total; x >= s; --x) {
      const auto from = static_cast<std::size_t>(x - s);
      if (reach[static_cast<std::size_t>(x)] == -1 && reach[from] != -1 &&
          reach[from] < static_cast<std::int32_t>(i)) {
        reach[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i);
      }
    }
  }
  // Reachable sums are symmetric about total/2; take the smallest x >= total/2.
  std::int64_t x = (total + 1) / 2;
  while (reach[static_cast<std::size_t>(x)] == -1) ++x;

  std::vector<char> positive(large.size(), 0);
  for (std::int64_t rest = x; rest > 0;) {
    const auto i = static_cast<std::size_t>(reach[static_cast<std::size_t>(rest)]);
    positive[i] = 1;
    rest -= large[i].surplus();
  }
  std::vector<Side> sides(large.size(), Side::first);
  for (std::size_t i = 0; i < large.size(); ++i) {
    if (large[i].surplus() == 0) continue;
    sides[i] = positive[i] ? forward_side(large[i]) : opposite(forward_side(large[i]));
  }
  return assemble(large, sides);
}

SurplusProfile surplus_profile(std::span<const LargeVertex> large, std::int64_t theta) {
  SurplusProfile profile;
  std::vector<std::pair<std::int64_t, Vertex>> huge;
  std::int64_t twice_b = 0;
  for (const LargeVertex& v : large) {
    SurplusEntry entry{v.id, v.out_surplus(), v.surplus(), v.out + v.in, v.surplus() >= theta};
    if (entry.huge) huge.emplace_back(-entry.surplus, v.id);
    else profile.g += entry.surplus;
    twice_b += entry.degree - entry.surplus;
    profile.m_a += entry.degree;
    profile.entries.push_back(entry);
  }
  std::sort(huge.begin(), huge.end());
  for (const auto& [neg, id] : huge) {
    profile.huge.push_back(id);
    profile.deltas.push_back(-neg);
  }
  profile.b = twice_b / 2;
  return profile;
}

double PipelineConfig::dense_threshold() const {
  const double base = d == 2 ? 1152.0 : 3200.0;
  return test_constants ? base / 100.0 : base;
}

std::string_view branch_name(Branch branch) {
  switch (branch) {
    case Branch::dense: return "dense";
    case Branch::small_gap: return "small_gap";
    case Branch::star_bisection: return "star_bisection";
    case Branch::three_huge: return "three_huge";
  }
  return "unknown";
}

double guarantee_target(std::int32_t d, std::int64_t m, double epsilon) {
  if (d != 2 && d != 3) throw InputError("guarantee_target supports d = 2 or 3");
  const double c = static_cast<double>(d - 1) / (2.0 * (2 * d - 1));
  return (c - epsilon) * static_cast<double>(m);
}

Bipartition local_search(const Digraph& graph, Bipartition partition) {
  const Vertex n = graph.vertex_count();
  if (partition.size() != n) throw InputError("partition size does not match digraph");
  // Change in (e12, e21) if v switches sides.
  const auto delta = [&](Vertex v) {
    const bool first = partition.on_first(v);
    CutStats d;
    for (Vertex u : graph.out_neighbors(v)) {
      const bool other_first = partition.on_first(u);
      if (first) {
        if (other_first) ++d.e21; else --d.e12;
      } else {
        if (other_first) --d.e21; else ++d.e12;
      }
    }
    for (Vertex u : graph.in_neighbors(v)) {
      const bool other_first = partition.on_first(u);
      if (first) {
        if (other_first) ++d.e12; else --d.e21;
      } else {
        if (other_first) --d.e12; else ++d.e21;
      }
    }
    return d;
  };
  // Lexicographic on (min, max): sideways moves that keep the smaller cut
  // and raise the larger one let later flips lift the smaller cut.
  const auto max_cut = [](const CutStats& s) { return s.e12 < s.e21 ? s.e21 : s.e12; };
  const auto better = [&](const CutStats& next, const CutStats& now) {
    return next.min_cut() > now.min_cut() ||
           (next.min_cut() == now.min_cut() && max_cut(next) > max_cut(now));
  };

  CutStats stats = cut_stats(graph, partition);
  for (bool improved = n > 0; improved;) {
    improved = false;
    Vertex since_flip = 0;
    for (Vertex v = 0; since_flip < n; v = (v + 1) % n) {
      const CutStats d = delta(v);
      const CutStats next{stats.e12 + d.e12, stats.e21 + d.e21};
      ++since_flip;
      if (better(next, stats)) {
        partition.flip(v);
        stats = next;
        since_flip = 1;
      }
    }
    // Single flips are exhausted; try both endpoints of an edge together.
    for (const Edge& e : graph.edges()) {
      if (e.tail > e.head && graph.has_edge(e.head, e.tail)) continue;
      const CutStats du = delta(e.tail);
      partition.flip(e.tail);
      const CutStats dv = delta(e.head);
      const CutStats next{stats.e12 + du.e12 + dv.e12, stats.e21 + du.e21 + dv.e21};
      if (better(next, stats)) {
        partition.flip(e.head);
        stats = next;
        improved = true;
        break;
      }
      partition.flip(e.tail);
    }
  }
  return partition;
}

PartitionResult run_d2(const Digraph& graph, PipelineConfig config) {
  config.d = 2;
  return run(graph, config);
}

PartitionResult run_d3(const Digraph& graph, PipelineConfig config) {
  config.d = 3;
  return run(graph, config);
}

PartitionResult run_pipeline(const Digraph& graph, const PipelineConfig& config) {
  validate_config(config);
  return run(graph, config);
}

}  // namespace judicious

#include "judicious/samplers.hpp"

#include <algorithm>
#include <random>

namespace judicious {

namespace {

enum class Part : std::uint8_t { fixed_first, fixed_second, free };

std::vector<Part> classify(const Digraph& graph, const FixedSides& fixed) {
  std::vector<Part> parts(static_cast<std::size_t>(graph.vertex_count()), Part::free);
  const auto place = [&](std::span<const Vertex> set, Part part) {
    for (Vertex v : set) {
      if (!graph.contains(v)) throw InputError("unknown vertex " + std::to_string(v), v);
      Part& slot = parts[static_cast<std::size_t>(v)];
      if (slot != Part::free && slot != part) {
        throw InputError("vertex " + std::to_string(v) + " is in both A1 and A2", v);
      }
      slot = part;
    }
  };
  place(fixed.first, Part::fixed_first);
  place(fixed.second, Part::fixed_second);
  return parts;
}

SplitCounts count_split(const Digraph& graph, const std::vector<Part>& parts) {
  SplitCounts c;
  for (const Edge& e : graph.edges()) {
    const Part a = parts[static_cast<std::size_t>(e.tail)];
    const Part b = parts[static_cast<std::size_t>(e.head)];
    if (a == Part::fixed_first && b == Part::fixed_second) ++c.a1_a2;
    if (a == Part::fixed_second && b == Part::fixed_first) ++c.a2_a1;
    if (a == Part::fixed_first && b == Part::free) ++c.a1_b;
    if (a == Part::free && b == Part::fixed_first) ++c.b_a1;
    if (a == Part::fixed_second && b == Part::free) ++c.a2_b;
    if (a == Part::free && b == Part::fixed_second) ++c.b_a2;
    if (a == Part::free && b == Part::free) ++c.b_b;
  }
  return c;
}

// Expectations scaled by den^2 so that comparisons at the boundary are exact.
struct ScaledExpectation {
  std::int64_t e12 = 0;
  std::int64_t e21 = 0;
  std::int64_t scale = 1;
};

ScaledExpectation scaled_expectation(const SplitCounts& c, Rational p) {
  const std::int64_t q = p.den - p.num;
  const std::int64_t s = p.den * p.den;
  return {c.a1_a2 * s + q * p.den * c.a1_b + p.num * p.den * c.b_a2 + p.num * q * c.b_b,
          c.a2_a1 * s + p.num * p.den * c.a2_b + q * p.den * c.b_a1 + p.num * q * c.b_b, s};
}

void validate(Rational p) {
  if (p.den <= 0 || p.num < 0 || p.num > p.den) {
    throw InputError("probability must satisfy 0 <= num <= den, den > 0");
  }
}

std::mt19937_64 attempt_rng(std::uint64_t seed, std::int32_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

Bipartition with_fixed(const std::vector<Part>& parts) {
  Bipartition partition(static_cast<Vertex>(parts.size()));
  for (std::size_t v = 0; v < parts.size(); ++v) {
    if (parts[v] == Part::fixed_second) partition.assign(static_cast<Vertex>(v), Side::second);
  }
  return partition;
}

// Shared retry loop. `draw` fills the free vertices of a partition;
// `meets` checks both thresholds on the recomputed stats.
template <typename Draw, typename Meets>
SampleOutcome retry(const Digraph& graph, const std::vector<Part>& parts, bool has_free,
                    std::uint64_t seed, std::int32_t max_attempts, Draw draw, Meets meets) {
  if (max_attempts < 1) throw InputError("max_attempts must be at least 1");
  SampleOutcome best;
  const std::int32_t limit = has_free ? max_attempts : 1;
  for (std::int32_t attempt = 0; attempt < limit; ++attempt) {
    Bipartition partition = with_fixed(parts);
    auto rng = attempt_rng(seed, attempt);
    draw(partition, rng);
    const CutStats stats = cut_stats(graph, partition);
    const bool accepted = meets(stats);
    if (attempt == 0 || accepted || stats.min_cut() > best.stats.min_cut()) {
      best.partition = std::move(partition);
      best.stats = stats;
      best.accepted = accepted;
    }
    best.attempts_used = attempt + 1;
    if (accepted) break;
  }
  return best;
}

}  // namespace

SplitCounts split_counts(const Digraph& graph, const FixedSides& fixed) {
  return count_split(graph, classify(graph, fixed));
}

ExpectedCuts expected_cuts(const Digraph& graph, const FixedSides& fixed, Rational p) {
  validate(p);
  const ScaledExpectation e = scaled_expectation(split_counts(graph, fixed), p);
  const auto scale = static_cast<double>(e.scale);
  return {static_cast<double>(e.e12) / scale, static_cast<double>(e.e21) / scale};
}

SampleOutcome second_moment_partition(const Digraph& graph, const FixedSides& fixed,
                                      const SamplerConfig& config) {
  validate(config.p);
  if (!(config.epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (graph.edge_count() == 0) throw InputError("second_moment_partition needs edges");
  const std::vector<Part> parts = classify(graph, fixed);
  const ScaledExpectation e = scaled_expectation(count_split(graph, parts), config.p);
  const auto m = static_cast<double>(graph.edge_count());
  const double slack = config.epsilon * m * static_cast<double>(e.scale);

  std::vector<Vertex> free_vertices;
  std::int64_t free_max_degree = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (parts[static_cast<std::size_t>(v)] != Part::free) continue;
    free_vertices.push_back(v);
    free_max_degree = std::max(free_max_degree, graph.degree(v));
  }

  const Rational p = config.p;
  auto outcome = retry(
      graph, parts, !free_vertices.empty(), config.seed, config.max_attempts,
      [&](Bipartition& partition, std::mt19937_64& rng) {
        std::uniform_int_distribution<std::int64_t> roll(0, p.den - 1);
        for (Vertex v : free_vertices) {
          partition.assign(v, roll(rng) < p.num ? Side::first : Side::second);
        }
      },
      [&](const CutStats& stats) {
        const auto d12 = static_cast<double>(stats.e12 * e.scale - e.e12);
        const auto d21 = static_cast<double>(stats.e21 * e.scale - e.e21);
        return d12 >= -slack && d21 >= -slack;
      });
  outcome.target12 = static_cast<double>(e.e12) / static_cast<double>(e.scale) - config.epsilon * m;
  outcome.target21 = static_cast<double>(e.e21) / static_cast<double>(e.scale) - config.epsilon * m;
  outcome.precondition_met =
      static_cast<double>(free_max_degree) <= config.epsilon * config.epsilon / 4.0 * m;
  return outcome;
}

SampleOutcome quarter_partition(const Digraph& graph, double epsilon, std::uint64_t seed,
                                std::int32_t max_attempts) {
  SamplerConfig config;
  config.p = {1, 2};
  config.epsilon = epsilon;
  config.seed = seed;
  config.max_attempts = max_attempts;
  SampleOutcome outcome = second_moment_partition(graph, {}, config);
  const auto m = static_cast<double>(graph.edge_count());
  const auto n = static_cast<double>(graph.vertex_count());
  outcome.precondition_met =
      static_cast<double>(max_degree(graph)) <= epsilon * epsilon / 4.0 * m ||
      m >= 8.0 / (epsilon * epsilon) * n;
  return outcome;
}

BisectionTargets bisection_targets(const Digraph& graph, const FixedSides& fixed,
                                   const StarDecomposition& decomposition, double epsilon) {
  const SplitCounts c = split_counts(graph, fixed);
  const std::int64_t odd = decomposition.antiparallel_seeded ? decomposition.tau_prime
                                                             : decomposition.tau;
  const auto n = static_cast<double>(graph.vertex_count());
  const double common = 2.0 * static_cast<double>(c.b_b) + n - static_cast<double>(odd);
  BisectionTargets t;
  t.odd_count = odd;
  t.target12 = (8.0 * static_cast<double>(c.a1_a2) +
                4.0 * static_cast<double>(c.a1_b + c.b_a2) + common) / 8.0 - epsilon * n;
  t.target21 = (8.0 * static_cast<double>(c.a2_a1) +
                4.0 * static_cast<double>(c.b_a1 + c.a2_b) + common) / 8.0 - epsilon * n;
  return t;
}

SampleOutcome star_bisection(const Digraph& graph, const FixedSides& fixed,
                             const StarDecomposition& decomposition, double epsilon,
                             std::uint64_t seed, std::int32_t max_attempts) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  const std::vector<Part> parts = classify(graph, fixed);
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (parts[static_cast<std::size_t>(v)] == Part::free) free_vertices.push_back(v);
  }
  std::vector<Vertex> covered(decomposition.leftover);
  for (const Star& star : decomposition.stars) {
    covered.push_back(star.apex);
    covered.insert(covered.end(), star.leaves.begin(), star.leaves.end());
  }
  std::sort(covered.begin(), covered.end());
  if (covered != free_vertices) {
    throw InputError("decomposition does not cover V \\ (A1 u A2) exactly once");
  }

  const BisectionTargets targets = bisection_targets(graph, fixed, decomposition, epsilon);
  // Compare 8*cut against the integer part of 8*target; epsilon enters once.
  const SplitCounts c = split_counts(graph, fixed);
  const std::int64_t base = 2 * c.b_b + graph.vertex_count() - targets.odd_count;
  const std::int64_t need12 = 8 * c.a1_a2 + 4 * (c.a1_b + c.b_a2) + base;
  const std::int64_t need21 = 8 * c.a2_a1 + 4 * (c.b_a1 + c.a2_b) + base;
  const double slack = 8.0 * epsilon * static_cast<double>(graph.vertex_count());

  auto outcome = retry(
      graph, parts, !free_vertices.empty(), seed, max_attempts,
      [&](Bipartition& partition, std::mt19937_64& rng) {
        std::bernoulli_distribution coin(0.5);
        for (const Star& star : decomposition.stars) {
          const Side apex_side = coin(rng) ? Side::first : Side::second;
          partition.assign(star.apex, apex_side);
          for (Vertex leaf : star.leaves) partition.assign(leaf, opposite(apex_side));
        }
        for (Vertex u : decomposition.leftover) {
          partition.assign(u, coin(rng) ? Side::first : Side::second);
        }
      },
      [&](const CutStats& stats) {
        return static_cast<double>(8 * stats.e12 - need12) >= -slack &&
               static_cast<double>(8 * stats.e21 - need21) >= -slack;
      });
  outcome.target12 = targets.target12;
  outcome.target21 = targets.target21;
  return outcome;
}

}  // namespace judicious

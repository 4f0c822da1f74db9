#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "judicious/core.hpp"
#include "judicious/decomposition.hpp"

namespace judicious {

/// Exact probability num/den, 0 <= num <= den.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 2;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Pre-assigned vertices A1 (side 1) and A2 (side 2); everything else is B.
struct FixedSides {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// Directed edge counts between A1, A2 and B.
struct SplitCounts {
  std::int64_t a1_a2 = 0, a2_a1 = 0;
  std::int64_t a1_b = 0, b_a1 = 0;
  std::int64_t a2_b = 0, b_a2 = 0;
  std::int64_t b_b = 0;
};

/// Throws InputError when A1 and A2 overlap or contain unknown vertices.
SplitCounts split_counts(const Digraph& graph, const FixedSides& fixed);

struct ExpectedCuts {
  double e12 = 0.0;
  double e21 = 0.0;
};

/// Expected directional cuts when each B vertex lands on side 1 with
/// probability p independently.
ExpectedCuts expected_cuts(const Digraph& graph, const FixedSides& fixed, Rational p);

struct SamplerConfig {
  Rational p{1, 2};
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::int32_t max_attempts = 200;
};

struct SampleOutcome {
  Bipartition partition;
  CutStats stats;
  bool accepted = false;
  std::int32_t attempts_used = 0;
  double target12 = 0.0;
  double target21 = 0.0;
  /// False when the sampler's degree hypothesis did not hold; the run is
  /// then best-effort.
  bool precondition_met = true;
};

/// Independent placement of B with probability p, retried until both cuts
/// reach E[cut] - epsilon*m. Returns the first accepted draw, otherwise the
/// draw with the largest min-cut (earliest on ties) and accepted = false.
SampleOutcome second_moment_partition(const Digraph& graph, const FixedSides& fixed,
                                      const SamplerConfig& config);

/// second_moment_partition with p = 1/2 and nothing fixed; accepted draws
/// have both cuts >= (1/4 - epsilon) m.
SampleOutcome quarter_partition(const Digraph& graph, double epsilon, std::uint64_t seed,
                                std::int32_t max_attempts = 200);

/// Acceptance thresholds of the star-based sampler; uses tau_prime when the
/// decomposition was antiparallel-seeded and tau otherwise.
struct BisectionTargets {
  double target12 = 0.0;
  double target21 = 0.0;
  std::int64_t odd_count = 0;  // the tau or tau_prime that was used
};

BisectionTargets bisection_targets(const Digraph& graph, const FixedSides& fixed,
                                   const StarDecomposition& decomposition, double epsilon);

/// Each apex on a uniform side with its leaves opposite, leftover vertices
/// uniform, A1/A2 fixed. Accepts when both cuts reach bisection_targets.
/// Throws InputError if the decomposition does not cover B exactly.
SampleOutcome star_bisection(const Digraph& graph, const FixedSides& fixed,
                             const StarDecomposition& decomposition, double epsilon,
                             std::uint64_t seed, std::int32_t max_attempts = 200);

}  // namespace judicious

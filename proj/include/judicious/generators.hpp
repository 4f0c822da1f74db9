#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judicious/core.hpp"

namespace judicious {

enum class Family {
  d1_star_triangle,
  eulerian_complete,
  lower_bound,
  k33_oriented,
  k33_plus_3regular,
  k55_mixed,
  random_min_outdeg,
};

std::string_view family_name(Family family);
/// Accepts the canonical names and the short CLI aliases (`d1`, `eulerian`,
/// `k33`, `k33_plus`, `k55`, `random`). Throws InputError otherwise.
Family parse_family(std::string_view name);

/// Parameters for one generated instance. Only the fields a family reads are
/// validated; the rest are ignored.
struct GadgetSpec {
  Family family = Family::eulerian_complete;
  std::int32_t d = 2;
  std::int32_t k = 0;
  std::int32_t n = 0;
  std::int32_t q = 3;
  double extra = 0.0;
  std::uint64_t seed = 0;
  /// When set, `pad_min_out_degree` is applied to the generated graph.
  std::optional<std::int32_t> pad_out_degree;

  friend bool operator==(const GadgetSpec&, const GadgetSpec&) = default;
};

/// Short stable description such as `lower_bound(d=2,k=50)`.
std::string describe(const GadgetSpec& spec);

Digraph generate(const GadgetSpec& spec);

/// Orientation of K_q along an Eulerian circuit (q odd, q >= 3). Every vertex
/// ends with in- and out-degree (q-1)/2.
Digraph eulerian_complete(std::int32_t q);

struct LowerBoundGadget {
  Digraph graph;
  /// The vertex of the K_{2d+1} copy that receives an edge from every vertex
  /// of the K_{2d-1} copies.
  Vertex hub = 0;
};

/// k disjoint Eulerian K_{2d-1} plus one Eulerian K_{2d+1}; all copy vertices
/// point into the hub. Copies occupy ids [0, k(2d-1)), the hub is k(2d-1).
LowerBoundGadget lower_bound_gadget(std::int32_t d, std::int32_t k);

/// Star K_{1,n-1} plus one leaf-leaf edge: the triangle 0 -> 1 -> 2 -> 0 and
/// every other leaf pointing into the centre 0.
Digraph d1_gadget(std::int32_t n);

/// K_{3,n-3} with all edges from the large part {3..n-1} into {0,1,2}.
Digraph k33_oriented(std::int32_t n);
/// k33_oriented plus the circulant out-edges i -> i+1, i+2, i+3 (mod n-3)
/// inside the large part.
Digraph k33_plus_3regular(std::int32_t n);
/// K_{5,n-5}: vertex 0 points to every vertex of {5..n-1}; each of those
/// points to 1, 2, 3 and 4.
Digraph k55_mixed(std::int32_t n);

/// Each vertex gets `d` distinct uniformly chosen out-neighbours, then about
/// `extra * n` further edges are sprinkled uniformly (duplicates rejected).
Digraph random_min_outdeg(std::int32_t n, std::int32_t d, double extra, std::uint64_t seed);

/// Adds edges v -> u, u ascending, to every vertex of out-degree below `d`
/// until it reaches `d`. Existing edges are kept. Used to lift the
/// concluding families, which have a constant number of deficient vertices,
/// to a given minimum out-degree.
Digraph pad_min_out_degree(const Digraph& graph, std::int32_t d);

}  // namespace judicious

#include "judicious/decomposition.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "judicious/oracle.hpp"

namespace judicious {

void Matching::match(Vertex u, Vertex v) {
  if (u == v || matched(u) || matched(v)) {
    throw InputError("cannot match " + std::to_string(u) + " with " + std::to_string(v));
  }
  mate_[static_cast<std::size_t>(u)] = v;
  mate_[static_cast<std::size_t>(v)] = u;
}

void Matching::unmatch(Vertex v) {
  const Vertex u = mate(v);
  if (u < 0) return;
  mate_[static_cast<std::size_t>(u)] = -1;
  mate_[static_cast<std::size_t>(v)] = -1;
}

std::int64_t Matching::size() const {
  return std::count_if(mate_.begin(), mate_.end(), [](Vertex m) { return m >= 0; }) / 2;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (mate(v) > v) out.push_back({v, mate(v)});
  }
  return out;
}

std::vector<Vertex> Matching::unmatched() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!matched(v)) out.push_back(v);
  }
  return out;
}

bool Matching::valid_in(const UnderlyingGraph& graph) const {
  if (vertex_count() != graph.vertex_count()) return false;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    const Vertex u = mate(v);
    if (u < 0) continue;
    if (u >= vertex_count() || mate(u) != v || !graph.adjacent(u, v)) return false;
  }
  return true;
}

namespace {

// Edmonds' blossom search, one augmenting-path BFS per exposed root.
class BlossomSearch {
 public:
  explicit BlossomSearch(const UnderlyingGraph& graph)
      : graph_(graph),
        n_(graph.vertex_count()),
        match_(idx(n_), -1),
        parent_(idx(n_), -1),
        base_(idx(n_), 0),
        used_(idx(n_), 0),
        blossom_(idx(n_), 0),
        lca_mark_(idx(n_), 0) {}

  Matching run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[idx(v)] >= 0) continue;
      for (Vertex u : graph_.neighbors(v)) {
        if (match_[idx(u)] < 0) {
          match_[idx(u)] = v;
          match_[idx(v)] = u;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[idx(root)] >= 0) continue;
      Vertex end = find_path(root);
      while (end >= 0) {
        const Vertex pv = parent_[idx(end)];
        const Vertex next = match_[idx(pv)];
        match_[idx(end)] = pv;
        match_[idx(pv)] = end;
        end = next;
      }
    }
    Matching result(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[idx(v)] > v) result.match(v, match_[idx(v)]);
    }
    return result;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    ++stamp_;
    for (;;) {
      a = base_[idx(a)];
      lca_mark_[idx(a)] = stamp_;
      if (match_[idx(a)] < 0) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (lca_mark_[idx(b)] == stamp_) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = 1;
      blossom_[idx(base_[idx(match_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[idx(i)] = i;
    used_[idx(root)] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex to : graph_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] >= 0 && parent_[idx(match_[idx(to)])] >= 0)) {
          const Vertex current = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = current;
              if (!used_[idx(i)]) {
                used_[idx(i)] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] < 0) return to;
          used_[idx(match_[idx(to)])] = 1;
          queue.push(match_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const UnderlyingGraph& graph_;
  Vertex n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::uint64_t stamp_ = 0;
};

// Perfect matching of G[subset] in global ids, if one exists.
std::optional<std::vector<Edge>> perfect_matching_on(const UnderlyingGraph& graph,
                                                     std::span<const Vertex> subset) {
  if (subset.size() % 2 == 1) return std::nullopt;
  if (subset.empty()) return std::vector<Edge>{};
  const auto sub = induced(graph, subset);
  const Matching m = maximum_matching(sub.graph);
  if (2 * m.size() != static_cast<std::int64_t>(subset.size())) return std::nullopt;
  std::vector<Edge> out;
  for (const Edge& e : m.edges()) {
    out.push_back({sub.original[static_cast<std::size_t>(e.tail)],
                   sub.original[static_cast<std::size_t>(e.head)]});
  }
  return out;
}

std::vector<Vertex> without(std::span<const Vertex> set, std::initializer_list<Vertex> drop) {
  std::vector<Vertex> out;
  out.reserve(set.size());
  for (Vertex v : set) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  }
  return out;
}

struct Violation {
  Vertex left_out;
  std::vector<Edge> matching;  // perfect matching of T - left_out with a half-adjacent edge
};

// Searches a near-perfect matching of `set` that would make some vertex free.
std::optional<Violation> find_tightness_violation(const UnderlyingGraph& graph,
                                                  const std::vector<Vertex>& set) {
  std::vector<char> in_set(static_cast<std::size_t>(graph.vertex_count()), 0);
  for (Vertex v : set) in_set[static_cast<std::size_t>(v)] = 1;
  for (Vertex u : set) {
    const auto rest = without(set, {u});
    if (!perfect_matching_on(graph, rest)) {
      throw StructuralError("absorbed set is not factor-critical at vertex " + std::to_string(u));
    }
    for (Vertex x : rest) {
      for (Vertex y : graph.neighbors(x)) {
        if (y <= x || y == u || !in_set[static_cast<std::size_t>(y)]) continue;
        if (graph.adjacent(u, x) == graph.adjacent(u, y)) continue;
        if (auto pm = perfect_matching_on(graph, without(rest, {x, y}))) {
          pm->push_back({x, y});
          return Violation{u, std::move(*pm)};
        }
      }
    }
  }
  return std::nullopt;
}

struct Expansion {
  bool tight = false;
  std::vector<Vertex> component;  // when tight
  Matching exchanged;             // when not tight
};

Matching rematch(const Matching& matching, std::span<const Vertex> released,
                 std::span<const Edge> added) {
  Matching out = matching;
  for (Vertex v : released) out.unmatch(v);
  for (const Edge& e : added) out.match(e.tail, e.head);
  return out;
}

[[noreturn]] void not_maximum() {
  throw InputError("matching is not maximum: an augmenting path leaves the tight set");
}

// Grows a tight set T around the non-free unmatched vertex w. T is kept
// tight, contains w as its only unmatched vertex and never splits a matching
// edge. Stops when T is a whole component, or when one of the exchanges
// available at the boundary raises the free-vertex count.
Expansion expand(const UnderlyingGraph& graph, const Matching& matching, Vertex w) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  std::vector<char> in_t(n, 0);
  std::vector<Vertex> tight_set{w};
  in_t[static_cast<std::size_t>(w)] = 1;
  const auto outside_w_neighbor = [&](Vertex v) {
    for (Vertex x : graph.neighbors(v)) {
      if (!matching.matched(x) && !in_t[static_cast<std::size_t>(x)]) return true;
    }
    return false;
  };
  const auto t_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex x : graph.neighbors(v)) {
      if (in_t[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
  };

  for (;;) {
    Vertex v1 = -1;
    for (Vertex t : tight_set) {
      for (Vertex x : graph.neighbors(t)) {
        if (!in_t[static_cast<std::size_t>(x)]) {
          v1 = x;
          break;
        }
      }
      if (v1 >= 0) break;
    }
    if (v1 < 0) {
      std::sort(tight_set.begin(), tight_set.end());
      return {true, std::move(tight_set), {}};
    }
    if (!matching.matched(v1)) not_maximum();
    const Vertex v2 = matching.mate(v1);
    if (outside_w_neighbor(v2)) not_maximum();

    const auto n1 = t_neighbors(v1);
    const auto n2 = t_neighbors(v2);
    // Re-match an endpoint into T; its partner is left unmatched and free.
    const auto exchange_through = [&](Vertex inner, Vertex anchor, Vertex freed) {
      auto pm = perfect_matching_on(graph, without(tight_set, {anchor}));
      if (!pm) throw StructuralError("tight set lost factor-criticality");
      pm->push_back({inner, anchor});
      std::vector<Vertex> released(tight_set);
      released.push_back(inner);
      released.push_back(freed);
      return Expansion{false, {}, rematch(matching, released, *pm)};
    };
    for (Vertex x : n1) {
      if (!std::binary_search(n2.begin(), n2.end(), x)) return exchange_through(v1, x, v2);
    }
    for (Vertex x : n2) {
      if (!std::binary_search(n1.begin(), n1.end(), x)) {
        if (outside_w_neighbor(v1)) not_maximum();
        return exchange_through(v2, x, v1);
      }
    }
    if (outside_w_neighbor(v1)) not_maximum();

    std::vector<Vertex> grown(tight_set);
    grown.push_back(v1);
    grown.push_back(v2);
    std::sort(grown.begin(), grown.end());
    if (auto violation = find_tightness_violation(graph, grown)) {
      return {false, {}, rematch(matching, grown, violation->matching)};
    }
    tight_set = std::move(grown);
    in_t[static_cast<std::size_t>(v1)] = 1;
    in_t[static_cast<std::size_t>(v2)] = 1;
  }
}

void require_maximum(const UnderlyingGraph& graph, const Matching& matching) {
  if (!matching.valid_in(graph)) throw InputError("matching is not a matching of this graph");
  if (matching.size() != maximum_matching(graph).size()) {
    throw InputError("matching is not maximum");
  }
}

}  // namespace

Matching maximum_matching(const UnderlyingGraph& graph) {
  return BlossomSearch(graph).run();
}

bool is_free(const UnderlyingGraph& graph, const Matching& matching, Vertex w) {
  if (matching.matched(w)) return false;
  for (Vertex x : graph.neighbors(w)) {
    if (matching.matched(x) && !graph.adjacent(w, matching.mate(x))) return true;
  }
  return false;
}

std::int64_t free_vertex_count(const UnderlyingGraph& graph, const Matching& matching) {
  std::int64_t count = 0;
  for (Vertex w = 0; w < graph.vertex_count(); ++w) {
    if (is_free(graph, matching, w)) ++count;
  }
  return count;
}

Matching maximize_free_vertices(const UnderlyingGraph& graph, Matching matching) {
  require_maximum(graph, matching);
  std::vector<char> certified(static_cast<std::size_t>(graph.vertex_count()), 0);
  std::int64_t free_count = free_vertex_count(graph, matching);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex w : matching.unmatched()) {
      if (certified[static_cast<std::size_t>(w)] || is_free(graph, matching, w)) continue;
      Expansion step = expand(graph, matching, w);
      if (step.tight) {
        for (Vertex v : step.component) certified[static_cast<std::size_t>(v)] = 1;
        continue;
      }
      const std::int64_t after = free_vertex_count(graph, step.exchanged);
      if (after <= free_count || step.exchanged.size() != matching.size()) {
        throw StructuralError("exchange around vertex " + std::to_string(w) +
                              " did not raise the free-vertex count");
      }
      matching = std::move(step.exchanged);
      free_count = after;
      changed = true;
      break;
    }
  }
  return matching;
}

TightReport tight_components(const UnderlyingGraph& graph, const Matching& matching) {
  require_maximum(graph, matching);
  TightReport report;
  for (Vertex w : matching.unmatched()) {
    if (is_free(graph, matching, w)) continue;
    Expansion step = expand(graph, matching, w);
    if (!step.tight) {
      throw InputError("matching does not maximise free vertices: an exchange at vertex " +
                       std::to_string(w) + " still raises the free count");
    }
    report.components.push_back({std::move(step.component), w, false});
  }
  return report;
}

bool brute_force_tight_check(const UnderlyingGraph& component) {
  const Vertex n = component.vertex_count();
  if (n > 9) throw InputError("brute_force_tight_check is limited to 9 vertices");
  if (n == 0 || connected_components(component).size() != 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) rest.push_back(u);
    }
    const auto sub = induced(component, rest);
    const auto matchings = enumerate_perfect_matchings(sub.graph);
    if (matchings.empty()) return false;
    for (const auto& pm : matchings) {
      for (const Edge& e : pm) {
        const Vertex x = sub.original[static_cast<std::size_t>(e.tail)];
        const Vertex y = sub.original[static_cast<std::size_t>(e.head)];
        if (component.adjacent(v, x) != component.adjacent(v, y)) return false;
      }
    }
  }
  return true;
}

double default_degree_cap(const Digraph& graph, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (graph.vertex_count() == 0) return 0.0;
  const double c = static_cast<double>(graph.edge_count()) / graph.vertex_count();
  return 2.0 * c / epsilon;
}

StarDecomposition star_decompose(const Digraph& graph, std::span<const Vertex> vertex_set,
                                 double degree_cap, bool prefer_antiparallel) {
  StarDecomposition out;
  out.vertex_set = normalized_vertex_set(graph.vertex_count(), vertex_set);
  out.degree_cap = degree_cap;
  out.antiparallel_seeded = prefer_antiparallel;
  if (out.vertex_set.empty()) return out;

  const auto sub = induced(graph, out.vertex_set);
  const UnderlyingGraph local = underlying(sub.graph);
  const auto global = [&](Vertex v) { return sub.original[static_cast<std::size_t>(v)]; };

  Matching matching = maximize_free_vertices(local, maximum_matching(local));
  TightReport report = tight_components(local, matching);
  out.tau = odd_components(local);
  out.tight_count = static_cast<std::int64_t>(report.components.size());

  for (TightComponent& component : report.components) {
    if (component.vertices.size() != 3) continue;
    std::optional<Edge> lifted;
    for (std::size_t i = 0; i < 3 && !lifted; ++i) {
      for (std::size_t j = i + 1; j < 3 && !lifted; ++j) {
        const Vertex a = component.vertices[i];
        const Vertex b = component.vertices[j];
        if (sub.graph.has_edge(a, b) && sub.graph.has_edge(b, a)) lifted = Edge{a, b};
      }
    }
    if (!lifted) continue;
    component.antiparallel_lift = true;
    ++out.sigma;
    if (prefer_antiparallel) {
      for (Vertex v : component.vertices) matching.unmatch(v);
      matching.match(lifted->tail, lifted->head);
      for (Vertex v : component.vertices) {
        if (v != lifted->tail && v != lifted->head) component.unmatched = v;
      }
    }
  }
  out.tau_prime = out.tight_count - out.sigma;

  const std::vector<Edge> seeds = matching.edges();
  std::vector<std::int64_t> seed_index(static_cast<std::size_t>(local.vertex_count()), -1);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    seed_index[static_cast<std::size_t>(seeds[i].tail)] = static_cast<std::int64_t>(i);
    seed_index[static_cast<std::size_t>(seeds[i].head)] = static_cast<std::int64_t>(i);
  }
  std::vector<Vertex> apex(seeds.size(), -1);
  std::vector<std::vector<Vertex>> extra_leaves(seeds.size());
  for (Vertex w : matching.unmatched()) {
    const bool heavy = static_cast<double>(graph.degree(global(w))) > degree_cap;
    if (heavy || !is_free(local, matching, w)) {
      out.leftover.push_back(global(w));
      continue;
    }
    std::int64_t best = -1;
    Vertex best_apex = -1;
    for (Vertex x : local.neighbors(w)) {
      if (local.adjacent(w, matching.mate(x))) continue;
      const std::int64_t i = seed_index[static_cast<std::size_t>(x)];
      if (best < 0 || i < best) {
        best = i;
        best_apex = x;
      }
    }
    const auto slot = static_cast<std::size_t>(best);
    if (apex[slot] >= 0 && apex[slot] != best_apex) {
      throw StructuralError("two unmatched vertices use different free neighbours of one edge");
    }
    apex[slot] = best_apex;
    extra_leaves[slot].push_back(w);
  }

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Star star;
    star.seed = {global(seeds[i].tail), global(seeds[i].head)};
    const Vertex local_apex = apex[i] >= 0 ? apex[i] : seeds[i].tail;
    star.apex = global(local_apex);
    star.leaves.push_back(global(matching.mate(local_apex)));
    for (Vertex w : extra_leaves[i]) star.leaves.push_back(global(w));
    std::sort(star.leaves.begin(), star.leaves.end());
    out.stars.push_back(std::move(star));
  }

  for (TightComponent& component : report.components) {
    for (Vertex& v : component.vertices) v = global(v);
    std::sort(component.vertices.begin(), component.vertices.end());
    component.unmatched = global(component.unmatched);
  }
  out.tight = std::move(report.components);
  std::sort(out.leftover.begin(), out.leftover.end());
  return out;
}

}  // namespace judicious

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rwlab/error.hpp"
#include "rwlab/rng.hpp"

namespace rwlab {

using Vertex = std::uint32_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected edge; stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge canonical(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Each position in the concatenated
/// neighbor array is an *arc* (directed traversal u -> x); arcs map to the
/// undirected edge index they belong to.
class Graph {
 public:
  Graph() = default;

  /// Builds a connected simple graph. Duplicate edges are merged; self-loops,
  /// out-of-range endpoints and disconnected inputs are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g = assemble(n, edges);
    if (auto comps = g.connected_components(); comps.size() > 1) {
      std::ostringstream msg;
      msg << "graph is disconnected: " << comps.size() << " components (sizes";
      for (const auto& c : comps) msg << ' ' << c.size();
      msg << "; representatives";
      for (const auto& c : comps) msg << ' ' << c.front();
      msg << ')';
      throw GraphError(msg.str());
    }
    return g;
  }

  /// Same as from_edges but accepts disconnected graphs. Walk routines assume
  /// connectivity, so this is reserved for induced subgraph extraction.
  static Graph from_edges_relaxed(std::size_t n, std::span<const Edge> edges) {
    return assemble(n, edges);
  }

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_arcs() const noexcept { return targets_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
    return best;
  }

  /// Index of the first arc leaving v; arc (v, neighbors(v)[i]) is arc_begin(v) + i.
  std::size_t arc_begin(Vertex v) const { return offsets_[v]; }
  std::size_t edge_of_arc(std::size_t arc) const { return arc_edge_[arc]; }

  std::optional<std::size_t> arc_index(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
  }
  bool has_edge(Vertex u, Vertex v) const {
    return u < num_vertices() && v < num_vertices() && arc_index(u, v).has_value();
  }

  /// Canonical (u < v) edges, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(num_vertices());
    for (Vertex v = 0; v < num_vertices(); ++v) d[v] = degree(v);
    return d;
  }

  /// Hop distances from source; kUnreachable for other components.
  std::vector<std::size_t> bfs_distances(Vertex source) const {
    std::vector<std::size_t> dist(num_vertices(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex x : neighbors(u)) {
        if (dist[x] == kUnreachable) {
          dist[x] = dist[u] + 1;
          queue.push_back(x);
        }
      }
    }
    return dist;
  }

  std::vector<std::vector<Vertex>> connected_components() const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(num_vertices(), false);
    for (Vertex s = 0; s < num_vertices(); ++s) {
      if (seen[s]) continue;
      auto& comp = comps.emplace_back();
      std::vector<Vertex> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (Vertex x : neighbors(u)) {
          if (!seen[x]) {
            seen[x] = true;
            stack.push_back(x);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
    }
    return comps;
  }

  bool is_bipartite() const {
    std::vector<int> color(num_vertices(), -1);
    for (Vertex s = 0; s < num_vertices(); ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::deque<Vertex> queue{s};
      while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex x : neighbors(u)) {
          if (color[x] < 0) {
            color[x] = 1 - color[u];
            queue.push_back(x);
          } else if (color[x] == color[u]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  static Graph assemble(std::size_t n, std::span<const Edge> input) {
    if (n == 0) throw GraphError("graph must have at least one vertex");
    if (n > std::numeric_limits<Vertex>::max()) throw GraphError("too many vertices");
    std::vector<Edge> edges;
    edges.reserve(input.size());
    for (const Edge& e : input) {
      if (e.u >= n || e.v >= n) {
        std::ostringstream msg;
        msg << "edge (" << e.u << ", " << e.v << ") out of range for n = " << n;
        throw GraphError(msg.str());
      }
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
      edges.push_back(Edge::canonical(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : edges) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

    std::vector<std::pair<Vertex, std::size_t>> slots(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t id = 0; id < edges.size(); ++id) {
      slots[fill[edges[id].u]++] = {edges[id].v, id};
      slots[fill[edges[id].v]++] = {edges[id].u, id};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    }
    g.targets_.reserve(slots.size());
    g.arc_edge_.reserve(slots.size());
    for (const auto& [x, id] : slots) {
      g.targets_.push_back(x);
      g.arc_edge_.push_back(id);
    }
    g.edges_ = std::move(edges);
    return g;
  }

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::size_t> arc_edge_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::span<const Edge> edges, std::size_t n) {
  return Graph::from_edges(n, edges);
}

/// Bijection on vertex indices 0..n-1.
class Permutation {
 public:
  explicit Permutation(std::vector<Vertex> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> hit(mapping_.size(), false);
    for (Vertex x : mapping_) {
      if (x >= mapping_.size() || hit[x]) throw ConfigError("permutation is not a bijection");
      hit[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Vertex> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Vertex>(i);
    return Permutation(std::move(m));
  }

  static Permutation random(std::size_t n, Rng& rng) {
    std::vector<Vertex> m = identity(n).mapping_;
    for (std::size_t i = n; i > 1; --i) std::swap(m[i - 1], m[rng.below(i)]);
    return Permutation(std::move(m));
  }

  std::size_t size() const noexcept { return mapping_.size(); }
  Vertex operator()(Vertex v) const { return mapping_[v]; }
  std::span<const Vertex> mapping() const noexcept { return mapping_; }

  Permutation inverse() const {
    std::vector<Vertex> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<Vertex>(i);
    return Permutation(std::move(inv));
  }

 private:
  std::vector<Vertex> mapping_;
};

/// Re-indexes g so that (p(u), p(v)) is an edge of the result iff (u, v) is an edge of g.
inline Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) {
    throw ConfigError("permutation length " + std::to_string(p.size()) +
                      " does not match vertex count " + std::to_string(g.num_vertices()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back(Edge::canonical(p(e.u), p(e.v)));
  return Graph::from_edges_relaxed(g.num_vertices(), edges);
}

/// Induced subgraph on the vertices within `radius` hops of `center`.
struct LocalBall {
  Vertex center = 0;
  std::size_t radius = 0;
  std::vector<Vertex> members;  // sorted; members[i] is vertex i of `induced`
  Graph induced;

  std::optional<Vertex> local_index(Vertex v) const {
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v) return std::nullopt;
    return static_cast<Vertex>(it - members.begin());
  }
};

inline LocalBall local_ball(const Graph& g, Vertex center, std::size_t radius) {
  if (center >= g.num_vertices()) {
    throw GraphError("ball center " + std::to_string(center) + " out of range");
  }
  LocalBall ball;
  ball.center = center;
  ball.radius = radius;
  const auto dist = g.bfs_distances(center);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] <= radius) ball.members.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = ball.local_index(e.u);
    const auto b = ball.local_index(e.v);
    if (a && b) edges.push_back(Edge::canonical(*a, *b));
  }
  ball.induced = Graph::from_edges_relaxed(ball.members.size(), edges);
  return ball;
}

}  // namespace rwlab

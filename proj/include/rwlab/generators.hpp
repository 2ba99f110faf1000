#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}
inline void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t k) {
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) edges.push_back({first + i, first + j});
}
}  // namespace detail

inline Graph gen_clique(std::size_t k) {
  detail::require(k >= 1, "clique size must be >= 1");
  std::vector<Edge> edges;
  detail::add_clique(edges, 0, k);
  return build_graph(edges, k);
}

inline Graph gen_path(std::size_t n) {
  detail::require(n >= 1, "path length must be >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(edges, n);
}

inline Graph gen_cycle(std::size_t n) {
  detail::require(n >= 3, "cycle length must be >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return build_graph(edges, n);
}

/// Star K_{1,k}; vertex 0 is the center.
inline Graph gen_star(std::size_t k) {
  detail::require(k >= 1, "star must have >= 1 leaf");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.push_back({0, i});
  return build_graph(edges, k + 1);
}

/// K_{1,3} with one extra edge between leaves 1 and 2 (smallest non-bipartite
/// graph with unequal degrees).
inline Graph gen_star_plus_edge() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}};
  return build_graph(edges, 4);
}

/// Two copies of K_k on [0, k) and [k, 2k), joined by the bridge (k-1, k).
inline Graph gen_barbell(std::size_t k) {
  detail::require(k >= 1, "barbell clique size must be >= 1");
  std::vector<Edge> edges;
  detail::add_clique(edges, 0, k);
  detail::add_clique(edges, static_cast<Vertex>(k), k);
  edges.push_back({static_cast<Vertex>(k - 1), static_cast<Vertex>(k)});
  return build_graph(edges, 2 * k);
}

/// K_m on [0, m) with an m-vertex path m, m+1, ..., 2m-1 hanging off vertex m-1.
inline Graph gen_lollipop(std::size_t m) {
  detail::require(m >= 2, "lollipop clique size must be >= 2");
  std::vector<Edge> edges;
  detail::add_clique(edges, 0, m);
  for (Vertex i = static_cast<Vertex>(m - 1); i + 1 < 2 * m; ++i) edges.push_back({i, i + 1});
  return build_graph(edges, 2 * m);
}

/// Circular skip link graph: cycle on n vertices plus chords (i, i + s mod n).
inline Graph gen_csl(std::size_t n, std::size_t skip) {
  detail::require(n >= 5, "csl needs n >= 5");
  detail::require(skip >= 2 && 2 * skip < n,
                  "csl skip must satisfy 2 <= s < n/2 (s = +-1 mod n duplicates cycle edges)");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
    edges.push_back({i, static_cast<Vertex>((i + skip) % n)});
  }
  return build_graph(edges, n);
}

/// 4x4 rook's graph: cell (i, j) is vertex 4i + j; same row or column is adjacent.
inline Graph gen_rook4x4() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 16; ++a)
    for (Vertex b = a + 1; b < 16; ++b)
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.push_back({a, b});
  return build_graph(edges, 16);
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {+-(1,0), +-(0,1), +-(1,1)}; (i, j) is vertex 4i + j.
inline Graph gen_shrikhande() {
  constexpr int kShifts[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (const auto& s : kShifts) {
        const int ti = (i + s[0]) % 4;
        const int tj = (j + s[1]) % 4;
        edges.push_back({static_cast<Vertex>(4 * i + j), static_cast<Vertex>(4 * ti + tj)});
      }
    }
  }
  return build_graph(edges, 16);
}

}  // namespace rwlab

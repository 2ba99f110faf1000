#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

// Edge-list text format: a header line "n m", then m lines "u v" (0-based).

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n <= 0 || m < 0) {
    throw GraphError("edge list: expected header \"n m\" with n > 0 and m >= 0");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge list: edge " + std::to_string(i) + " has endpoint out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return build_graph(edges, static_cast<std::size_t>(n));
}

}  // namespace rwlab

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rwlab/graph.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/record.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

/// Graph decoded from a record. Vertex i stands for record id i + 1.
struct DecodedGraph {
  Graph graph;
  bool complete = false;
};

/// Recorded vertices are the ids in the record; recorded edges are the walked
/// steps plus the named-neighbor links. Restarts contribute no edge.
inline DecodedGraph decode(const Record& rec) {
  if (rec.tokens.empty()) throw ParseError("cannot decode an empty record");
  std::uint32_t max_id = 0;
  std::uint32_t current = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rec.tokens.size(); ++i) {
    const Token& tok = rec.tokens[i];
    max_id = std::max(max_id, tok.id);
    switch (tok.kind) {
      case TokenKind::Step:
        if (i > 0) edges.push_back(Edge::canonical(current - 1, tok.id - 1));
        current = tok.id;
        break;
      case TokenKind::Restart:
        current = tok.id;
        break;
      case TokenKind::Neighbor:
        edges.push_back(Edge::canonical(current - 1, tok.id - 1));
        break;
    }
  }
  return {Graph::from_edges(max_id, edges), false};
}

inline constexpr std::size_t kIsomorphismGuard = 16;

namespace detail {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.num_vertices()) {
    adj_g_ = adjacency(g);
    adj_h_ = adjacency(h);
    sig_g_ = signatures(g);
    sig_h_ = signatures(h);
    order_ = search_order(g);
  }

  bool run() {
    map_.assign(n_, kNone);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  static std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
    return a;
  }

  // Degree followed by the sorted neighbor degrees.
  static std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
    std::vector<std::vector<std::size_t>> sig(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Vertex x : g.neighbors(v)) sig[v].push_back(g.degree(x));
      std::sort(sig[v].begin(), sig[v].end());
      sig[v].insert(sig[v].begin(), g.degree(v));
    }
    return sig;
  }

  // Greedy order: each next vertex has the most neighbors already placed, so
  // adjacency constraints bite as early as possible.
  static std::vector<Vertex> search_order(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = 0;
      bool found = false;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (!found || links[v] > links[best] ||
            (links[v] == links[best] && g.degree(v) > g.degree(best))) {
          best = v;
          found = true;
        }
      }
      placed[best] = true;
      order.push_back(best);
      for (Vertex x : g.neighbors(best)) ++links[x];
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex a = order_[depth];
    for (Vertex b = 0; b < n_; ++b) {
      if (used_[b] || sig_g_[a] != sig_h_[b]) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex pa = order_[i];
        consistent = adj_g_[a][pa] == adj_h_[b][map_[pa]];
      }
      if (!consistent) continue;
      map_[a] = b;
      used_[b] = true;
      if (extend(depth + 1)) return true;
      used_[b] = false;
      map_[a] = kNone;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
  std::vector<std::vector<bool>> adj_g_, adj_h_;
  std::vector<std::vector<std::size_t>> sig_g_, sig_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Exact isomorphism test by backtracking with degree and neighbor-degree
/// pruning. Limited to small graphs.
inline bool is_isomorphic(const Graph& g, const Graph& h,
                          std::size_t guard = kIsomorphismGuard) {
  if (g.num_vertices() > guard || h.num_vertices() > guard) {
    throw GuardError("isomorphism test limited to " + std::to_string(guard) + " vertices");
  }
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  auto dg = g.degree_sequence();
  auto dh = h.degree_sequence();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return detail::IsomorphismSearch(g, h).run();
}

/// Anonymized name of each vertex (0 = never visited).
inline std::vector<std::uint32_t> anonymous_ids(const Walk& walk, std::size_t n) {
  std::vector<std::uint32_t> id(n, 0);
  std::uint32_t next = 0;
  for (Vertex v : walk.vertices) {
    if (id[v] == 0) id[v] = ++next;
  }
  return id;
}

struct ReconstructionReport {
  std::size_t trials = 0;
  std::size_t covered = 0;         // trials meeting the coverage precondition
  std::size_t failures = 0;        // covered trials whose decoding is not isomorphic to g
  std::size_t invented_edges = 0;  // decoded edges absent from g, over all trials

  double coverage_fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(trials);
  }
};

/// Samples `trials` walks (uniform start, walk i on stream (seed, i)), records
/// each with `scheme` and decodes it. When the walk meets the scheme's
/// coverage condition (all vertices visited for named neighbors, all edges
/// traversed for anonymization alone) the decoding must be isomorphic to g.
inline ReconstructionReport check_reconstruction(const Graph& g, const WalkConfig& config,
                                                 std::size_t trials,
                                                 RecordScheme scheme = RecordScheme::NamedNeighbors,
                                                 std::size_t threads = 1) {
  if (g.num_vertices() > kIsomorphismGuard) {
    throw GuardError("reconstruction check limited to " + std::to_string(kIsomorphismGuard) +
                     " vertices");
  }
  const WalkSampler sampler(g, config);
  struct Outcome {
    bool covered = false;
    bool failed = false;
    std::size_t invented = 0;
  };
  const auto outcomes = parallel_map(trials, threads, [&](std::size_t i) {
    const Walk walk = sampler.sample(std::nullopt, i);
    const Record rec = make_record(walk, g, scheme);
    const DecodedGraph decoded = decode(rec);
    const auto ids = anonymous_ids(walk, g.num_vertices());
    std::vector<Vertex> original(decoded.graph.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (ids[v] != 0) original[ids[v] - 1] = v;
    }
    Outcome out;
    for (const Edge& e : decoded.graph.edges()) {
      if (!g.has_edge(original[e.u], original[e.v])) ++out.invented;
    }
    if (scheme == RecordScheme::NamedNeighbors) {
      out.covered = decoded.graph.num_vertices() == g.num_vertices();
    } else {
      std::vector<bool> traversed(g.num_edges(), false);
      std::size_t count = 0;
      for (std::size_t t = 1; t < walk.vertices.size(); ++t) {
        if (walk.restart_flags[t - 1]) continue;
        const auto e = g.edge_of_arc(*g.arc_index(walk.vertices[t - 1], walk.vertices[t]));
        if (!traversed[e]) {
          traversed[e] = true;
          ++count;
        }
      }
      out.covered = count == g.num_edges();
    }
    if (out.covered) out.failed = !is_isomorphic(decoded.graph, g);
    return out;
  });

  ReconstructionReport report;
  report.trials = trials;
  for (const auto& o : outcomes) {
    report.covered += o.covered;
    report.failures += o.failed;
    report.invented_edges += o.invented;
  }
  return report;
}

}  // namespace rwlab

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rwlab/enumerate.hpp"
#include "rwlab/graph.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/record.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

inline constexpr double kDistributionTolerance = 1e-9;

/// Largest absolute difference between two discrete laws (missing keys = 0).
template <class Key>
double max_abs_difference(const std::map<Key, double>& a, const std::map<Key, double>& b) {
  double worst = 0.0;
  for (const auto& [k, p] : a) {
    const auto it = b.find(k);
    worst = std::max(worst, std::abs(p - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, p] : b) {
    if (!a.contains(k)) worst = std::max(worst, std::abs(p));
  }
  return worst;
}

inline Walk map_walk(const Walk& w, const Permutation& p) {
  Walk out = w;
  for (Vertex& v : out.vertices) v = p(v);
  return out;
}

/// Law of the serialized record under the given trajectory law.
inline std::map<std::string, double> record_distribution(const WalkDistribution& dist,
                                                         const Graph& g, RecordScheme scheme) {
  std::map<std::string, double> out;
  for (const auto& [w, p] : dist.probability) out[serialize(make_record(w, g, scheme))] += p;
  return out;
}

/// Walk configurations exercised by the invariance suite: {uniform, MDLR} x
/// {first order, non-backtracking, node2vec(2, 1)}, each without restarts and,
/// optionally, with probabilistic and periodic restarts.
inline std::vector<WalkConfig> invariance_configs(bool with_restarts) {
  std::vector<WalkConfig> out;
  const std::vector<RestartRule> restarts =
      with_restarts ? std::vector<RestartRule>{NoRestart{}, RestartProb{0.3}, RestartPeriod{3}}
                    : std::vector<RestartRule>{NoRestart{}};
  for (const ConductanceKind& c : {ConductanceKind{ConstantConductance{}},
                                   ConductanceKind{MdlrConductance{}}}) {
    for (int rule = 0; rule < 3; ++rule) {
      for (const auto& r : restarts) {
        WalkConfig cfg;
        cfg.conductance = c;
        cfg.non_backtracking = rule == 1;
        if (rule == 2) cfg.node2vec = Node2Vec{2.0, 1.0};
        cfg.restart = r;
        out.push_back(cfg);
      }
    }
  }
  return out;
}

struct InvarianceOptions {
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  std::size_t max_length = 4;
  std::size_t graphs_per_n = 200;
  /// Graph sizes up to this are enumerated exhaustively (all connected labeled graphs).
  std::size_t exhaustive_up_to = 4;
  bool with_restarts = true;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct InvarianceReport {
  std::size_t graphs = 0;
  std::size_t walk_law_checks = 0;    // trajectory laws mapped through the permutation
  std::size_t record_law_checks = 0;  // record laws, both schemes
  std::size_t exact_record_checks = 0;  // per-walk byte equality, both schemes
  std::size_t failures = 0;
  double max_difference = 0.0;
  std::vector<std::string> messages;  // first few failures

  void merge(const InvarianceReport& o) {
    graphs += o.graphs;
    walk_law_checks += o.walk_law_checks;
    record_law_checks += o.record_law_checks;
    exact_record_checks += o.exact_record_checks;
    failures += o.failures;
    max_difference = std::max(max_difference, o.max_difference);
    for (const auto& m : o.messages)
      if (messages.size() < 20) messages.push_back(m);
  }
};

/// Checks invariance of walks and records for one graph against its image
/// under `perm`, for every start vertex, configuration and length 1..max_length.
inline InvarianceReport check_invariance(const Graph& g, const Permutation& perm,
                                         const std::vector<WalkConfig>& configs,
                                         std::size_t max_length) {
  InvarianceReport rep;
  rep.graphs = 1;
  const Graph h = apply_permutation(g, perm);
  auto fail = [&](const std::string& what, const WalkConfig& cfg, Vertex s) {
    ++rep.failures;
    if (rep.messages.size() < 20) {
      rep.messages.push_back(what + " [" + describe(cfg) + ", l=" + std::to_string(cfg.length) +
                             ", n=" + std::to_string(g.num_vertices()) + ", start " +
                             std::to_string(s) + "]");
    }
  };
  for (WalkConfig cfg : configs) {
    for (std::size_t l = 1; l <= max_length; ++l) {
      cfg.length = l;
      for (Vertex s = 0; s < g.num_vertices(); ++s) {
        const auto dg = enumerate_walk_distribution(g, cfg, s);
        const auto dh = enumerate_walk_distribution(h, cfg, perm(s));

        std::map<Walk, double> mapped;
        for (const auto& [w, p] : dg.probability) mapped[map_walk(w, perm)] += p;
        const double dw = max_abs_difference(mapped, dh.probability);
        ++rep.walk_law_checks;
        rep.max_difference = std::max(rep.max_difference, dw);
        if (dw > kDistributionTolerance) fail("walk law differs", cfg, s);

        for (RecordScheme scheme : {RecordScheme::Anonymized, RecordScheme::NamedNeighbors}) {
          const double dr = max_abs_difference(record_distribution(dg, g, scheme),
                                               record_distribution(dh, h, scheme));
          ++rep.record_law_checks;
          rep.max_difference = std::max(rep.max_difference, dr);
          if (dr > kDistributionTolerance) fail("record law differs", cfg, s);

          for (const auto& [w, p] : dg.probability) {
            ++rep.exact_record_checks;
            if (serialize(make_record(w, g, scheme)) !=
                serialize(make_record(map_walk(w, perm), h, scheme))) {
              fail("record of a fixed walk differs", cfg, s);
            }
          }
        }
      }
    }
  }
  return rep;
}

/// All connected graphs on n labeled vertices (n <= 6 keeps this small).
inline std::vector<Graph> connected_labeled_graphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  if (slots.size() > 20) throw GuardError("exhaustive graph enumeration limited to n <= 6");
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) edges.push_back(slots[i]);
    Graph g = Graph::from_edges_relaxed(n, edges);
    if (g.connected_components().size() == 1) out.push_back(std::move(g));
  }
  return out;
}

/// Uniformly random connected labeled graph by rejection (each edge w.p. 1/2).
inline Graph random_connected_graph(std::size_t n, Rng& rng) {
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(0.5)) edges.push_back({u, v});
    Graph g = Graph::from_edges_relaxed(n, edges);
    if (g.connected_components().size() == 1) return g;
  }
}

inline InvarianceReport run_invariance_suite(const InvarianceOptions& opt) {
  const auto configs = invariance_configs(opt.with_restarts);
  InvarianceReport total;
  for (std::size_t n = std::max<std::size_t>(opt.min_n, 2); n <= opt.max_n; ++n) {
    std::vector<Graph> graphs;
    if (n <= opt.exhaustive_up_to) {
      graphs = connected_labeled_graphs(n);
    } else {
      Rng rng = Rng::stream(opt.seed, 0x1000 + n);
      for (std::size_t i = 0; i < opt.graphs_per_n; ++i) graphs.push_back(random_connected_graph(n, rng));
    }
    const auto reports = parallel_map(graphs.size(), opt.threads, [&](std::size_t i) {
      Rng rng = Rng::stream(opt.seed, (std::uint64_t{n} << 32) + i);
      return check_invariance(graphs[i], Permutation::random(n, rng), configs, opt.max_length);
    });
    for (const auto& r : reports) total.merge(r);
  }
  return total;
}

}  // namespace rwlab

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rwlab/graph.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

/// What must be covered:
///  - Vertex: every vertex visited.
///  - Edge: every edge traversed in at least one direction.
///  - Arc: every edge traversed in both directions (the strict definition).
enum class CoverMode { Vertex, Edge, Arc };

inline std::string to_string(CoverMode m) {
  switch (m) {
    case CoverMode::Vertex: return "vertex";
    case CoverMode::Edge: return "edge";
    case CoverMode::Arc: return "arc";
  }
  return "?";
}

inline constexpr std::uint64_t kCoverBudget = 1'000'000'000;

struct CoverSample {
  std::uint64_t steps = 0;
  bool censored = false;  // budget ran out before coverage
};

struct FixedStart {
  Vertex vertex = 0;
};
/// Exact maximum over starts of the Monte Carlo mean (worst-case cover time).
struct WorstOverStarts {};
/// Start drawn uniformly per trial.
struct UniformStart {};
using StartPolicy = std::variant<FixedStart, WorstOverStarts, UniformStart>;

inline std::string to_string(const StartPolicy& p) {
  if (const auto* f = std::get_if<FixedStart>(&p)) return "fixed(" + std::to_string(f->vertex) + ")";
  if (std::holds_alternative<WorstOverStarts>(p)) return "worst-over-starts";
  return "uniform";
}

/// Monte Carlo cover-time estimate. Censored trials are excluded from the
/// mean and counted separately.
struct CoverStats {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t trials = 0;
  std::size_t censored = 0;
  CoverMode mode = CoverMode::Vertex;
  StartPolicy start_policy = UniformStart{};
  std::optional<Vertex> worst_start;  // set for WorstOverStarts
};

/// The part of the graph a cover run must cover.
class CoverTarget {
 public:
  static CoverTarget whole(const Graph& g, CoverMode mode) {
    CoverTarget t(g, mode);
    t.vertex_in_.assign(g.num_vertices(), true);
    t.edge_in_.assign(g.num_edges(), true);
    t.total_ = mode == CoverMode::Vertex ? g.num_vertices()
               : mode == CoverMode::Edge ? g.num_edges()
                                         : g.num_arcs();
    return t;
  }

  /// Vertices within `radius` hops of `center` and the edges among them.
  static CoverTarget ball(const Graph& g, Vertex center, std::size_t radius, CoverMode mode) {
    CoverTarget t(g, mode);
    const auto dist = g.bfs_distances(center);
    t.vertex_in_.assign(g.num_vertices(), false);
    t.edge_in_.assign(g.num_edges(), false);
    std::size_t vertices = 0;
    std::size_t edges = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (dist[v] <= radius) {
        t.vertex_in_[v] = true;
        ++vertices;
      }
    }
    const auto all = g.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
      if (t.vertex_in_[all[e].u] && t.vertex_in_[all[e].v]) {
        t.edge_in_[e] = true;
        ++edges;
      }
    }
    t.total_ = mode == CoverMode::Vertex ? vertices : mode == CoverMode::Edge ? edges : 2 * edges;
    return t;
  }

  const Graph& graph() const noexcept { return *graph_; }
  CoverMode mode() const noexcept { return mode_; }
  std::size_t total() const noexcept { return total_; }
  bool contains_vertex(Vertex v) const { return vertex_in_[v]; }
  bool contains_edge(std::size_t e) const { return edge_in_[e]; }

 private:
  CoverTarget(const Graph& g, CoverMode mode) : graph_(&g), mode_(mode) {}

  const Graph* graph_;
  CoverMode mode_;
  std::vector<bool> vertex_in_;
  std::vector<bool> edge_in_;
  std::size_t total_ = 0;
};

/// Runs one open-ended walk from `start` until `target` is covered.
inline CoverSample run_cover(const TransitionKernel& kernel, const CoverTarget& target,
                             Vertex start, Rng rng, std::uint64_t budget = kCoverBudget) {
  const Graph& g = kernel.graph();
  const CoverMode mode = target.mode();
  std::size_t covered = 0;
  std::vector<bool> seen(mode == CoverMode::Vertex ? g.num_vertices()
                         : mode == CoverMode::Edge ? g.num_edges()
                                                   : g.num_arcs(),
                         false);
  if (mode == CoverMode::Vertex && target.contains_vertex(start)) {
    seen[start] = true;
    ++covered;
  }
  if (covered >= target.total()) return {0, false};

  WalkStepper stepper(kernel, start, std::move(rng));
  for (std::uint64_t t = 1; t <= budget; ++t) {
    const auto step = stepper.next();
    if (step.restart) continue;
    std::size_t slot = 0;
    bool inside = false;
    switch (mode) {
      case CoverMode::Vertex:
        slot = step.to;
        inside = target.contains_vertex(step.to);
        break;
      case CoverMode::Edge:
        slot = g.edge_of_arc(step.arc);
        inside = target.contains_edge(slot);
        break;
      case CoverMode::Arc:
        slot = step.arc;
        inside = target.contains_edge(g.edge_of_arc(step.arc));
        break;
    }
    if (inside && !seen[slot]) {
      seen[slot] = true;
      if (++covered == target.total()) return {t, false};
    }
  }
  return {budget, true};
}

/// Steps until the whole graph is covered, walking from `start` on stream
/// (config.seed, walk_index).
inline CoverSample sample_cover_time(const Graph& g, const WalkConfig& config, Vertex start,
                                     CoverMode mode, std::uint64_t walk_index = 0,
                                     std::uint64_t budget = kCoverBudget) {
  if (start >= g.num_vertices()) throw ConfigError("start vertex out of range");
  const TransitionKernel kernel(g, config);
  return run_cover(kernel, CoverTarget::whole(g, mode), start,
                   Rng::stream(config.seed, walk_index), budget);
}

namespace detail {

struct Moments {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t censored = 0;
};

// Summation runs in index order so results are identical for any thread count.
inline Moments summarize(const std::vector<CoverSample>& samples) {
  Moments m;
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t k = 0;
  for (const auto& s : samples) {
    if (s.censored) {
      ++m.censored;
      continue;
    }
    const double x = static_cast<double>(s.steps);
    sum += x;
    sum_sq += x * x;
    ++k;
  }
  if (k == 0) return m;
  m.mean = sum / static_cast<double>(k);
  if (k > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * m.mean) / static_cast<double>(k - 1));
    m.std_err = std::sqrt(var / static_cast<double>(k));
  }
  return m;
}

}  // namespace detail

inline CoverStats estimate_cover(const TransitionKernel& kernel, const CoverTarget& target,
                                 std::size_t trials, const StartPolicy& policy,
                                 std::size_t threads = 1,
                                 std::uint64_t budget = kCoverBudget) {
  if (trials == 0) throw ConfigError("trials must be >= 1");
  const Graph& g = kernel.graph();
  const std::uint64_t seed = kernel.config().seed;
  CoverStats stats;
  stats.trials = trials;
  stats.mode = target.mode();
  stats.start_policy = policy;

  auto run_from = [&](Vertex start, std::uint64_t index_base) {
    return parallel_map(trials, threads, [&](std::size_t i) {
      return run_cover(kernel, target, start, Rng::stream(seed, index_base + i), budget);
    });
  };

  if (const auto* fixed = std::get_if<FixedStart>(&policy)) {
    if (fixed->vertex >= g.num_vertices()) throw ConfigError("start vertex out of range");
    const auto m = detail::summarize(run_from(fixed->vertex, 0));
    stats.mean = m.mean;
    stats.std_err = m.std_err;
    stats.censored = m.censored;
  } else if (std::holds_alternative<UniformStart>(policy)) {
    const auto samples = parallel_map(trials, threads, [&](std::size_t i) {
      Rng rng = Rng::stream(seed, i);
      const auto start = static_cast<Vertex>(rng.below(g.num_vertices()));
      return run_cover(kernel, target, start, std::move(rng), budget);
    });
    const auto m = detail::summarize(samples);
    stats.mean = m.mean;
    stats.std_err = m.std_err;
    stats.censored = m.censored;
  } else {
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      const auto m = detail::summarize(run_from(s, std::uint64_t{s} * trials));
      stats.censored += m.censored;
      if (!stats.worst_start || m.mean > stats.mean) {
        stats.mean = m.mean;
        stats.std_err = m.std_err;
        stats.worst_start = s;
      }
    }
  }
  return stats;
}

inline CoverStats estimate_cover_time(const Graph& g, const WalkConfig& config, CoverMode mode,
                                      std::size_t trials, const StartPolicy& policy,
                                      std::size_t threads = 1,
                                      std::uint64_t budget = kCoverBudget) {
  const TransitionKernel kernel(g, config);
  return estimate_cover(kernel, CoverTarget::whole(g, mode), trials, policy, threads, budget);
}

/// Whole-graph vertex and edge (one direction) cover times of one trajectory.
struct JointCoverSample {
  CoverSample vertex;
  CoverSample edge;
};

/// Equivalent to run_cover in Vertex and in Edge mode with the same stream,
/// but walks the trajectory once.
inline JointCoverSample run_joint_cover(const TransitionKernel& kernel, Vertex start, Rng rng,
                                        std::uint64_t budget = kCoverBudget) {
  const Graph& g = kernel.graph();
  std::vector<bool> seen_vertex(g.num_vertices(), false);
  std::vector<bool> seen_edge(g.num_edges(), false);
  seen_vertex[start] = true;
  std::size_t vertices = 1;
  std::size_t edges = 0;
  JointCoverSample out{{budget, true}, {budget, true}};
  if (vertices == g.num_vertices()) out.vertex = {0, false};
  if (g.num_edges() == 0) out.edge = {0, false};
  if (!out.edge.censored) return out;

  WalkStepper stepper(kernel, start, std::move(rng));
  for (std::uint64_t t = 1; t <= budget; ++t) {
    const auto step = stepper.next();
    if (step.restart) continue;
    if (!seen_vertex[step.to]) {
      seen_vertex[step.to] = true;
      if (++vertices == g.num_vertices()) out.vertex = {t, false};
    }
    const std::size_t e = g.edge_of_arc(step.arc);
    if (!seen_edge[e]) {
      seen_edge[e] = true;
      if (++edges == g.num_edges()) {
        out.edge = {t, false};
        return out;
      }
    }
  }
  return out;
}

/// Paired vertex/edge estimate from shared trajectories. `gap` summarizes the
/// per-trajectory difference edge - vertex, which is never negative.
struct JointCoverStats {
  CoverStats vertex;
  CoverStats edge;
  double gap_mean = 0.0;
  double gap_std_err = 0.0;
};

inline JointCoverStats estimate_joint_cover_time(const Graph& g, const WalkConfig& config,
                                                 std::size_t trials, Vertex start,
                                                 std::size_t threads = 1,
                                                 std::uint64_t budget = kCoverBudget) {
  if (trials == 0) throw ConfigError("trials must be >= 1");
  if (start >= g.num_vertices()) throw ConfigError("start vertex out of range");
  const TransitionKernel kernel(g, config);
  const auto samples = parallel_map(trials, threads, [&](std::size_t i) {
    return run_joint_cover(kernel, start, Rng::stream(config.seed, i), budget);
  });
  std::vector<CoverSample> vertex(trials);
  std::vector<CoverSample> edge(trials);
  std::vector<CoverSample> gap(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    vertex[i] = samples[i].vertex;
    edge[i] = samples[i].edge;
    gap[i] = {edge[i].steps - vertex[i].steps, edge[i].censored};
  }
  JointCoverStats out;
  auto fill = [&](CoverStats& s, CoverMode mode, const detail::Moments& m) {
    s.mean = m.mean;
    s.std_err = m.std_err;
    s.censored = m.censored;
    s.trials = trials;
    s.mode = mode;
    s.start_policy = FixedStart{start};
  };
  fill(out.vertex, CoverMode::Vertex, detail::summarize(vertex));
  fill(out.edge, CoverMode::Edge, detail::summarize(edge));
  const auto m = detail::summarize(gap);
  out.gap_mean = m.mean;
  out.gap_std_err = m.std_err;
  return out;
}

/// Cover time of the ball of radius r around v for walks started (and
/// restarted) at v. Without a restart rule the estimate may be censored.
inline CoverStats local_cover_time(const Graph& g, Vertex v, std::size_t radius,
                                   const WalkConfig& config, CoverMode mode, std::size_t trials,
                                   std::size_t threads = 1,
                                   std::uint64_t budget = kCoverBudget) {
  if (v >= g.num_vertices()) throw ConfigError("ball center out of range");
  if (const auto* k = std::get_if<RestartPeriod>(&config.restart); k && k->k < radius + 1) {
    throw ConfigError("periodic restarts need k >= r + 1 to cover a ball of radius r");
  }
  const TransitionKernel kernel(g, config);
  return estimate_cover(kernel, CoverTarget::ball(g, v, radius, mode), trials, FixedStart{v},
                        threads, budget);
}

/// Closed-form upper bound on the local cover time of a radius-r ball in a
/// graph of maximum degree `max_degree` under restarts, from the spanning-tree
/// argument. Vertex mode accepts periods k >= r; edge and arc modes need
/// k >= r + 1.
inline double restart_cover_bound(std::size_t max_degree, std::size_t radius,
                                  const RestartRule& restart, CoverMode mode) {
  if (radius == 0) return 0.0;
  const double delta = static_cast<double>(max_degree);
  const double r = static_cast<double>(radius);
  const bool vertex = mode == CoverMode::Vertex;
  const double tree = vertex ? std::pow(delta, r) - 1.0 : std::pow(delta, 2.0 * r) - 1.0;
  double bound = 0.0;
  if (const auto* p = std::get_if<RestartProb>(&restart)) {
    const double a = p->alpha;
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("restart probability must lie in (0, 1)");
    const double growth = delta / (1.0 - a);
    const double e1 = vertex ? r : r + 1.0;
    const double e2 = vertex ? 2.0 * r : 2.0 * r + 1.0;
    bound = 2.0 * tree *
            (1.0 / a + (1.0 / a) * std::pow(growth, e1) +
             (1.0 / a) * (1.0 / a - 1.0) * std::pow(growth, e2));
  } else if (const auto* k = std::get_if<RestartPeriod>(&restart)) {
    const std::size_t min_k = vertex ? radius : radius + 1;
    if (k->k < min_k || k->k == 0) {
      throw ConfigError("restart period must be >= " + std::to_string(min_k) + " for " +
                        to_string(mode) + " cover");
    }
    const double kk = static_cast<double>(k->k);
    bound = 2.0 * tree * (kk + kk * std::pow(delta, vertex ? r : r + 1.0));
  } else {
    throw ConfigError("local cover time has no finite bound without restarts");
  }
  if (!std::isfinite(bound)) throw ConfigError("restart bound overflows (alpha too close to 1)");
  return bound;
}

}  // namespace rwlab

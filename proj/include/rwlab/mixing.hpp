#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rwlab/conductance.hpp"
#include "rwlab/graph.hpp"
#include "rwlab/parallel.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

struct StationaryDistribution {
  std::vector<double> pi;
  std::size_t iterations = 0;
};

inline constexpr double kStationaryTolerance = 1e-12;
inline constexpr std::size_t kStationaryMaxIterations = 1'000'000;

/// Row vector times matrix: (x P)_j = sum_i x_i P_ij.
inline std::vector<double> left_multiply(std::span<const double> x, const TransitionMatrix& P) {
  const std::size_t n = P.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0) continue;
    const auto row = P.row(i);
    for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * row[j];
  }
  return y;
}

/// Matrix times column vector: (P x)_i = sum_j P_ij x_j.
inline std::vector<double> right_multiply(const TransitionMatrix& P, std::span<const double> x) {
  const std::size_t n = P.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = P.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

/// The undirected graph of nonzero transitions.
inline Graph support_graph(const TransitionMatrix& P) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < P.size(); ++u)
    for (std::size_t x = u + 1; x < P.size(); ++x)
      if (P(u, x) > 0.0 || P(x, u) > 0.0)
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(x)});
  return Graph::from_edges_relaxed(P.size(), edges);
}

/// Stationary distribution by power iteration from the uniform vector. The
/// chain must be irreducible and aperiodic (connected, non-bipartite support).
inline StationaryDistribution stationary(const TransitionMatrix& P) {
  const Graph support = support_graph(P);
  if (support.connected_components().size() > 1) {
    throw ConfigError("stationary: transition graph is disconnected");
  }
  if (support.is_bipartite()) {
    throw ConfigError("stationary: transition graph is bipartite, power iteration oscillates");
  }
  const std::size_t n = P.size();
  StationaryDistribution out;
  out.pi.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 1; it <= kStationaryMaxIterations; ++it) {
    auto next = left_multiply(out.pi, P);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - out.pi[i]));
    out.pi = std::move(next);
    out.iterations = it;
    if (diff < kStationaryTolerance) return out;
  }
  throw Error("stationary: power iteration did not converge");
}

/// Expected output of the averaging reader after an l-step walk from each
/// vertex: h_u = (1 / (l + 1)) sum_{t=0}^{l} [P^t x]_u.
inline std::vector<double> expected_output(const TransitionMatrix& P, std::span<const double> x,
                                           std::size_t length) {
  if (x.size() != P.size()) throw ConfigError("feature vector length mismatch");
  std::vector<double> y(x.begin(), x.end());
  std::vector<double> acc = y;
  for (std::size_t t = 1; t <= length; ++t) {
    y = right_multiply(P, y);
    for (std::size_t i = 0; i < y.size(); ++i) acc[i] += y[i];
  }
  for (double& a : acc) a /= static_cast<double>(length + 1);
  return acc;
}

/// Row u of (1 / (l + 1)) sum_{t=0}^{l} P^t.
inline std::vector<double> averaged_power_row(const TransitionMatrix& P, Vertex u,
                                              std::size_t length) {
  if (u >= P.size()) throw ConfigError("vertex out of range");
  std::vector<double> row(P.size(), 0.0);
  row[u] = 1.0;
  std::vector<double> acc = row;
  for (std::size_t t = 1; t <= length; ++t) {
    row = left_multiply(row, P);
    for (std::size_t i = 0; i < row.size(); ++i) acc[i] += row[i];
  }
  for (double& a : acc) a /= static_cast<double>(length + 1);
  return acc;
}

/// Expected |d h_u / d x_v| of the averaging reader: the (u, v) entry of the
/// averaged matrix powers.
inline double jacobian_expectation(const TransitionMatrix& P, Vertex u, Vertex v,
                                   std::size_t length) {
  if (v >= P.size()) throw ConfigError("vertex out of range");
  return averaged_power_row(P, u, length)[v];
}

struct VisitFrequencies {
  std::vector<double> mean;     // per target vertex v
  std::vector<double> std_err;  // empirical standard error of the per-walk fraction
  std::size_t trials = 0;
};

/// Monte Carlo estimate of E[(visits to v among v_0..v_l) / (l + 1)] for walks
/// from u, for every v at once. Walk i uses stream (config.seed, i).
inline VisitFrequencies monte_carlo_visit_frequencies(const Graph& g, WalkConfig config, Vertex u,
                                                      std::size_t length, std::size_t trials,
                                                      std::size_t threads = 1) {
  if (u >= g.num_vertices()) throw ConfigError("start vertex out of range");
  if (trials == 0) throw ConfigError("trials must be >= 1");
  config.length = length;
  const WalkSampler sampler(g, config);
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kBlock = 1024;
  const std::size_t blocks = (trials + kBlock - 1) / kBlock;

  struct Partial {
    std::vector<double> sum;
    std::vector<double> sum_sq;
  };
  const auto partials = parallel_map(blocks, threads, [&](std::size_t b) {
    Partial p{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    std::vector<std::size_t> visits(n);
    const std::size_t end = std::min(trials, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) {
      std::fill(visits.begin(), visits.end(), 0);
      for (Vertex v : sampler.sample(u, i).vertices) ++visits[v];
      for (std::size_t v = 0; v < n; ++v) {
        const double f = static_cast<double>(visits[v]) / static_cast<double>(length + 1);
        p.sum[v] += f;
        p.sum_sq[v] += f * f;
      }
    }
    return p;
  });

  VisitFrequencies out;
  out.trials = trials;
  out.mean.assign(n, 0.0);
  out.std_err.assign(n, 0.0);
  std::vector<double> sum_sq(n, 0.0);
  for (const auto& p : partials) {
    for (std::size_t v = 0; v < n; ++v) {
      out.mean[v] += p.sum[v];
      sum_sq[v] += p.sum_sq[v];
    }
  }
  const double k = static_cast<double>(trials);
  for (std::size_t v = 0; v < n; ++v) {
    out.mean[v] /= k;
    if (trials > 1) {
      const double var = std::max(0.0, (sum_sq[v] - k * out.mean[v] * out.mean[v]) / (k - 1.0));
      out.std_err[v] = std::sqrt(var / k);
    }
  }
  return out;
}

inline double monte_carlo_visit_frequency(const Graph& g, const WalkConfig& config, Vertex u,
                                          Vertex v, std::size_t length, std::size_t trials,
                                          std::size_t threads = 1) {
  if (v >= g.num_vertices()) throw ConfigError("target vertex out of range");
  return monte_carlo_visit_frequencies(g, config, u, length, trials, threads).mean[v];
}

/// Binomial standard deviation of a mean of `trials` draws with success rate
/// p. It bounds the spread of an averaged visit fraction with expectation p.
inline double binomial_sigma(double p, std::size_t trials) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(trials));
}

}  // namespace rwlab

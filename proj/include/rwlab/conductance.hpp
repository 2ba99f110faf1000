#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rwlab/graph.hpp"

namespace rwlab {

/// c(u, v) = 1 on every edge: the uniform random walk.
struct ConstantConductance {};

/// Minimum degree local rule: c(u, v) = 1 / min(deg u, deg v).
struct MdlrConductance {};

/// Any positive weight computed from the two endpoint degrees only, which is
/// what keeps the walk invariant under vertex re-indexing.
struct DegreeRuleConductance {
  std::function<double(std::size_t, std::size_t)> weight;
  std::string name = "degree-rule";
};

using ConductanceKind = std::variant<ConstantConductance, MdlrConductance, DegreeRuleConductance>;

inline std::string to_string(const ConductanceKind& kind) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantConductance>) return "uniform";
        else if constexpr (std::is_same_v<K, MdlrConductance>) return "mdlr";
        else return k.name;
      },
      kind);
}

namespace detail {
inline double conductance_unchecked(const Graph& g, const ConductanceKind& kind, Vertex u,
                                    Vertex v) {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantConductance>) {
          return 1.0;
        } else if constexpr (std::is_same_v<K, MdlrConductance>) {
          return 1.0 / static_cast<double>(std::min(g.degree(u), g.degree(v)));
        } else {
          const double w = k.weight(g.degree(u), g.degree(v));
          if (!(w > 0.0) || !std::isfinite(w)) {
            throw ConfigError("degree rule '" + k.name + "' produced a non-positive weight");
          }
          return w;
        }
      },
      kind);
}
}  // namespace detail

/// Edge weight c(u, v); (u, v) must be an edge.
inline double conductance(const Graph& g, const ConductanceKind& kind, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw GraphError("conductance requested for non-edge (" + std::to_string(u) + ", " +
                     std::to_string(v) + ")");
  }
  return detail::conductance_unchecked(g, kind, u, v);
}

/// First-order transition probability of every arc, aligned with the graph's
/// arc numbering: p(u, x) = c(u, x) / sum_{y in N(u)} c(u, y).
inline std::vector<double> arc_probabilities(const Graph& g, const ConductanceKind& kind) {
  std::vector<double> prob(g.num_arcs());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto nb = g.neighbors(u);
    const std::size_t base = g.arc_begin(u);
    double total = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      prob[base + i] = detail::conductance_unchecked(g, kind, u, nb[i]);
      total += prob[base + i];
    }
    for (std::size_t i = 0; i < nb.size(); ++i) prob[base + i] /= total;
  }
  return prob;
}

using StepDistribution = std::vector<std::pair<Vertex, double>>;

inline StepDistribution step_distribution_first_order(const Graph& g, const ConductanceKind& kind,
                                                      Vertex u) {
  if (u >= g.num_vertices()) throw GraphError("vertex out of range");
  const auto nb = g.neighbors(u);
  StepDistribution out;
  double total = 0.0;
  for (Vertex x : nb) {
    out.emplace_back(x, detail::conductance_unchecked(g, kind, u, x));
    total += out.back().second;
  }
  for (auto& [x, p] : out) p /= total;
  return out;
}

/// Dense row-stochastic matrix; entry (u, x) is the probability of stepping u -> x.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t u, std::size_t x) const { return data_[u * n_ + x]; }
  double& operator()(std::size_t u, std::size_t x) { return data_[u * n_ + x]; }
  std::span<const double> row(std::size_t u) const { return {data_.data() + u * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

inline TransitionMatrix transition_matrix(const Graph& g, const ConductanceKind& kind) {
  TransitionMatrix P(g.num_vertices());
  const auto prob = arc_probabilities(g, kind);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) P(u, nb[i]) = prob[g.arc_begin(u) + i];
  }
  return P;
}

}  // namespace rwlab

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rwlab/conductance.hpp"
#include "rwlab/graph.hpp"
#include "rwlab/rng.hpp"

namespace rwlab {

struct NoRestart {};
/// Restart with probability alpha at each step t >= 2, never twice in a row.
struct RestartProb {
  double alpha = 0.5;
};
/// Restart unconditionally at every t = 0 (mod k).
struct RestartPeriod {
  std::size_t k = 2;
};
using RestartRule = std::variant<NoRestart, RestartProb, RestartPeriod>;

/// node2vec return (p) and in-out (q) parameters.
struct Node2Vec {
  double p = 1.0;
  double q = 1.0;
};

struct WalkConfig {
  std::size_t length = 0;
  ConductanceKind conductance = ConstantConductance{};
  bool non_backtracking = false;
  std::optional<Node2Vec> node2vec;
  RestartRule restart = NoRestart{};
  std::uint64_t seed = 0;

  bool second_order() const { return non_backtracking || node2vec.has_value(); }
  bool has_restart() const { return !std::holds_alternative<NoRestart>(restart); }

  void validate() const {
    if (non_backtracking && node2vec) {
      throw ConfigError("non-backtracking and node2vec rules are mutually exclusive");
    }
    if (node2vec && !(node2vec->p > 0.0 && node2vec->q > 0.0)) {
      throw ConfigError("node2vec parameters p and q must be positive");
    }
    if (const auto* r = std::get_if<RestartProb>(&restart); r && !(r->alpha > 0.0 && r->alpha < 1.0)) {
      throw ConfigError("restart probability must lie strictly in (0, 1)");
    }
    if (const auto* r = std::get_if<RestartPeriod>(&restart); r && r->k <= 1) {
      throw ConfigError("restart period must be > 1");
    }
  }
};

/// Human-readable walk label such as "mdlr+nb" or "uniform+n2v(1,2)".
inline std::string describe(const WalkConfig& c) {
  std::string s = to_string(c.conductance);
  if (c.non_backtracking) s += "+nb";
  if (c.node2vec) {
    auto num = [](double x) {
      std::string t = std::to_string(x);
      t.erase(t.find_last_not_of('0') + 1);
      if (t.back() == '.') t.pop_back();
      return t;
    };
    s += "+n2v(" + num(c.node2vec->p) + "," + num(c.node2vec->q) + ")";
  }
  return s;
}

/// Trajectory v_0..v_l with restart flags r_1..r_l (restart_flags[t-1] is r_t).
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<bool> restart_flags;

  std::size_t length() const noexcept { return restart_flags.size(); }
  friend auto operator<=>(const Walk&, const Walk&) = default;
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Transition rules of one walk configuration on one graph.
///
/// All sampling goes through `weights`, which lists unnormalized transition
/// weights aligned with `neighbors(cur)`. Categorical draws invert the
/// cumulative sum in ascending neighbor order.
class TransitionKernel {
 public:
  TransitionKernel(const Graph& g, const WalkConfig& config)
      : graph_(&g), config_(config), arc_prob_(arc_probabilities(g, config.conductance)) {
    config_.validate();
    cumulative_.resize(arc_prob_.size());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      double acc = 0.0;
      for (std::size_t a = g.arc_begin(u); a < g.arc_begin(u) + g.degree(u); ++a) {
        acc += arc_prob_[a];
        cumulative_[a] = acc;
      }
    }
  }

  const Graph& graph() const noexcept { return *graph_; }
  const WalkConfig& config() const noexcept { return config_; }
  double arc_probability(std::size_t arc) const { return arc_prob_[arc]; }

  /// Unnormalized weights for the step out of `cur`. Without `prev` (first
  /// transition, or right after a restart) this is the first-order rule.
  void weights(std::optional<Vertex> prev, Vertex cur, std::vector<double>& out) const {
    const Graph& g = *graph_;
    const auto nb = g.neighbors(cur);
    const std::size_t base = g.arc_begin(cur);
    out.assign(nb.size(), 0.0);
    if (!prev || !config_.second_order()) {
      for (std::size_t i = 0; i < nb.size(); ++i) out[i] = arc_prob_[base + i];
      return;
    }
    if (config_.non_backtracking) {
      bool any = false;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] != *prev) {
          out[i] = arc_prob_[base + i];
          any = true;
        }
      }
      if (!any) {
        // Dangling vertex: the only way out is back.
        for (std::size_t i = 0; i < nb.size(); ++i) out[i] = nb[i] == *prev ? 1.0 : 0.0;
      }
      return;
    }
    const Node2Vec& n2v = *config_.node2vec;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double bias = 1.0 / n2v.q;  // distance 2 from prev
      if (nb[i] == *prev) bias = 1.0 / n2v.p;
      else if (g.has_edge(*prev, nb[i])) bias = 1.0;
      out[i] = bias * arc_prob_[base + i];
    }
  }

  StepDistribution distribution(std::optional<Vertex> prev, Vertex cur) const {
    std::vector<double> w;
    weights(prev, cur, w);
    double total = 0.0;
    for (double x : w) total += x;
    StepDistribution out;
    const auto nb = graph_->neighbors(cur);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (w[i] > 0.0) out.emplace_back(nb[i], w[i] / total);
    }
    return out;
  }

  /// Draws the next arc out of `cur`; returns its index into neighbors(cur).
  std::size_t sample(std::optional<Vertex> prev, Vertex cur, Rng& rng,
                     std::vector<double>& scratch) const {
    const Graph& g = *graph_;
    const std::size_t deg = g.degree(cur);
    if (deg == 0) throw GraphError("walk reached isolated vertex " + std::to_string(cur));
    const double u = rng.uniform();
    if (!prev || !config_.second_order()) {
      const std::size_t base = g.arc_begin(cur);
      const auto first = cumulative_.begin() + static_cast<std::ptrdiff_t>(base);
      const auto last = first + static_cast<std::ptrdiff_t>(deg);
      const double target = u * *(last - 1);
      const auto it = std::upper_bound(first, last, target);
      return std::min(static_cast<std::size_t>(it - first), deg - 1);
    }
    weights(prev, cur, scratch);
    double total = 0.0;
    for (double x : scratch) total += x;
    const double target = u * total;
    double acc = 0.0;
    std::size_t chosen = deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (scratch[i] <= 0.0) continue;
      acc += scratch[i];
      chosen = i;
      if (acc > target) break;
    }
    return chosen;
  }

 private:
  const Graph* graph_;
  WalkConfig config_;
  std::vector<double> arc_prob_;
  std::vector<double> cumulative_;
};

/// Open-ended walk iterator: the step-by-step core of the sampling algorithm.
class WalkStepper {
 public:
  struct Step {
    Vertex from = 0;
    Vertex to = 0;
    bool restart = false;
    std::size_t arc = 0;  // arc index of from -> to; meaningless on restarts
  };

  WalkStepper(const TransitionKernel& kernel, Vertex start, Rng rng)
      : kernel_(&kernel), rng_(std::move(rng)), start_(start), cur_(start) {}

  Vertex start() const noexcept { return start_; }
  Vertex current() const noexcept { return cur_; }
  std::size_t time() const noexcept { return t_; }

  Step next() {
    ++t_;
    bool restart = false;
    if (t_ >= 2) {
      const RestartRule& rule = kernel_->config().restart;
      if (const auto* p = std::get_if<RestartProb>(&rule)) {
        if (!last_restart_) restart = rng_.bernoulli(p->alpha);
      } else if (const auto* k = std::get_if<RestartPeriod>(&rule)) {
        restart = t_ % k->k == 0;
      }
    }
    Step step{cur_, start_, restart, 0};
    if (restart) {
      // Second-order history does not carry across a restart.
      prev_.reset();
    } else {
      const std::size_t i = kernel_->sample(prev_, cur_, rng_, scratch_);
      const Graph& g = kernel_->graph();
      step.arc = g.arc_begin(cur_) + i;
      step.to = g.neighbors(cur_)[i];
      prev_ = cur_;
    }
    cur_ = step.to;
    last_restart_ = restart;
    return step;
  }

 private:
  const TransitionKernel* kernel_;
  Rng rng_;
  Vertex start_;
  Vertex cur_;
  std::optional<Vertex> prev_;
  std::size_t t_ = 0;
  bool last_restart_ = false;
  std::vector<double> scratch_;
};

/// Samples fixed-length walks; walk i uses the stream (config.seed, i).
class WalkSampler {
 public:
  WalkSampler(const Graph& g, const WalkConfig& config) : kernel_(g, config) {}

  const TransitionKernel& kernel() const noexcept { return kernel_; }

  Walk sample(std::optional<Vertex> start, std::uint64_t walk_index = 0) const {
    const Graph& g = kernel_.graph();
    Rng rng = Rng::stream(kernel_.config().seed, walk_index);
    const Vertex v0 = start ? *start : static_cast<Vertex>(rng.below(g.num_vertices()));
    if (v0 >= g.num_vertices()) throw ConfigError("start vertex out of range");
    const std::size_t l = kernel_.config().length;
    Walk w;
    w.vertices.reserve(l + 1);
    w.restart_flags.reserve(l);
    w.vertices.push_back(v0);
    WalkStepper stepper(kernel_, v0, std::move(rng));
    for (std::size_t t = 1; t <= l; ++t) {
      const auto step = stepper.next();
      w.vertices.push_back(step.to);
      w.restart_flags.push_back(step.restart);
    }
    return w;
  }

 private:
  TransitionKernel kernel_;
};

inline Walk sample_walk(const Graph& g, const WalkConfig& config,
                        std::optional<Vertex> start = std::nullopt,
                        std::uint64_t walk_index = 0) {
  return WalkSampler(g, config).sample(start, walk_index);
}

inline StepDistribution step_distribution_second_order(const Graph& g, const WalkConfig& config,
                                                       Vertex prev, Vertex cur) {
  if (!g.has_edge(prev, cur)) throw GraphError("second-order step needs an edge (prev, cur)");
  return TransitionKernel(g, config).distribution(prev, cur);
}

/// Returns a description of the first violated walk invariant, if any.
inline std::optional<std::string> check_walk(const Graph& g, const WalkConfig& config,
                                             const Walk& w) {
  if (w.vertices.size() != w.restart_flags.size() + 1) return "vertex/flag length mismatch";
  if (w.vertices.empty()) return "empty walk";
  for (Vertex v : w.vertices) {
    if (v >= g.num_vertices()) return "vertex out of range";
  }
  if (!w.restart_flags.empty() && w.restart_flags[0]) return "r_1 must be false";
  for (std::size_t t = 1; t < w.vertices.size(); ++t) {
    const bool r = w.restart_flags[t - 1];
    const std::string at = " at t = " + std::to_string(t);
    if (r) {
      if (w.vertices[t] != w.vertices[0]) return "restart does not return to v_0" + at;
      if (std::holds_alternative<NoRestart>(config.restart)) return "restart without rule" + at;
      if (std::holds_alternative<RestartProb>(config.restart) && w.restart_flags[t - 2]) {
        return "consecutive restarts" + at;
      }
    } else if (!g.has_edge(w.vertices[t - 1], w.vertices[t])) {
      return "non-edge transition" + at;
    }
    if (const auto* k = std::get_if<RestartPeriod>(&config.restart);
        k && t >= 2 && (t % k->k == 0) != r) {
      return "periodic restart flag mismatch" + at;
    }
    if (config.non_backtracking && !r && t >= 2 && !w.restart_flags[t - 2] &&
        w.vertices[t] == w.vertices[t - 2] && g.degree(w.vertices[t - 1]) > 1) {
      return "backtracking step" + at;
    }
  }
  return std::nullopt;
}

}  // namespace rwlab

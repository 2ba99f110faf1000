#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rwlab/walk.hpp"

namespace rwlab {

/// Exact law of a fixed-length walk: every trajectory (vertices and restart
/// flags) with its probability.
struct WalkDistribution {
  std::map<Walk, double> probability;

  double total() const {
    double s = 0.0;
    for (const auto& [w, p] : probability) s += p;
    return s;
  }
};

inline constexpr std::size_t kEnumerationGuard = 10'000'000;

namespace detail {

class WalkEnumerator {
 public:
  WalkEnumerator(const TransitionKernel& kernel, std::size_t guard)
      : kernel_(kernel), guard_(guard) {}

  WalkDistribution run(Vertex start) {
    walk_.vertices = {start};
    walk_.restart_flags.clear();
    expand(std::nullopt, 1.0);
    return std::move(out_);
  }

 private:
  void expand(std::optional<Vertex> prev, double prob) {
    const WalkConfig& c = kernel_.config();
    const std::size_t t = walk_.length() + 1;
    if (t > c.length) {
      if (++visited_ > guard_) {
        throw GuardError("walk enumeration exceeds " + std::to_string(guard_) + " trajectories");
      }
      out_.probability[walk_] += prob;
      return;
    }
    double p_restart = 0.0;
    if (t >= 2) {
      if (const auto* r = std::get_if<RestartProb>(&c.restart)) {
        if (!walk_.restart_flags.back()) p_restart = r->alpha;
      } else if (const auto* k = std::get_if<RestartPeriod>(&c.restart)) {
        p_restart = t % k->k == 0 ? 1.0 : 0.0;
      }
    }
    if (p_restart > 0.0) {
      push(walk_.vertices.front(), true);
      expand(std::nullopt, prob * p_restart);
      pop();
    }
    if (p_restart < 1.0) {
      const Vertex cur = walk_.vertices.back();
      for (const auto& [x, p] : kernel_.distribution(prev, cur)) {
        push(x, false);
        expand(cur, prob * (1.0 - p_restart) * p);
        pop();
      }
    }
  }

  void push(Vertex v, bool restart) {
    walk_.vertices.push_back(v);
    walk_.restart_flags.push_back(restart);
  }
  void pop() {
    walk_.vertices.pop_back();
    walk_.restart_flags.pop_back();
  }

  const TransitionKernel& kernel_;
  std::size_t guard_;
  std::size_t visited_ = 0;
  Walk walk_;
  WalkDistribution out_;
};

}  // namespace detail

/// Enumerates every length-l trajectory from `start` with its exact probability
/// (product of the per-step probabilities, restart branches included).
inline WalkDistribution enumerate_walk_distribution(const Graph& g, const WalkConfig& config,
                                                    Vertex start,
                                                    std::size_t guard = kEnumerationGuard) {
  if (start >= g.num_vertices()) throw ConfigError("start vertex out of range");
  const TransitionKernel kernel(g, config);
  return detail::WalkEnumerator(kernel, guard).run(start);
}

}  // namespace rwlab

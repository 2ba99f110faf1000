#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rwlab/cover.hpp"
#include "rwlab/generators.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

struct CoverRow {
  std::string graph;
  std::string walk;
  CoverMode mode = CoverMode::Vertex;
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t trials = 0;
  std::size_t censored = 0;
};

inline constexpr const char* kCoverCsvHeader = "graph,walk,mode,mean,std_err,trials,censored";

inline std::string format_fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

inline void write_cover_csv(std::ostream& out, const std::vector<CoverRow>& rows) {
  out << kCoverCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.graph << ',' << r.walk << ',' << to_string(r.mode) << ',' << format_fixed(r.mean)
        << ',' << format_fixed(r.std_err) << ',' << r.trials << ',' << r.censored << '\n';
  }
}

inline CoverRow make_row(std::string graph, const WalkConfig& cfg, const CoverStats& s) {
  return {std::move(graph), describe(cfg), s.mode, s.mean, s.std_err, s.trials, s.censored};
}

/// Walk variants compared on lollipops: uniform and MDLR with and without
/// non-backtracking, and node2vec(p = 1, q = 2) over the uniform walk.
inline std::vector<WalkConfig> fig3_walks() {
  std::vector<WalkConfig> out;
  for (const ConductanceKind& c : {ConductanceKind{ConstantConductance{}},
                                   ConductanceKind{MdlrConductance{}}}) {
    for (bool nb : {false, true}) {
      WalkConfig cfg;
      cfg.conductance = c;
      cfg.non_backtracking = nb;
      out.push_back(cfg);
    }
  }
  WalkConfig n2v;
  n2v.node2vec = Node2Vec{1.0, 2.0};
  out.push_back(n2v);
  return out;
}

struct Fig3Options {
  std::vector<std::size_t> clique_sizes{10, 20, 40};  // lollipop(m) has 2m vertices
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  /// Scan every start (exact worst case) instead of the fixed clique start.
  bool full_scan = false;
};

/// Lollipop start used by default: vertex 0 lies in the clique away from the
/// path, where the walk must still find the far end of the path.
inline constexpr Vertex kLollipopStart = 0;

/// Per-trajectory excess of edge over vertex cover time (fixed start only).
struct CoverGap {
  std::string graph;
  std::string walk;
  double mean = 0.0;
  double std_err = 0.0;
};

struct Fig3Result {
  std::vector<CoverRow> rows;
  std::vector<CoverGap> gaps;  // empty with full_scan
};

inline Fig3Result run_fig3(const Fig3Options& opt) {
  Fig3Result out;
  const auto walks = fig3_walks();
  for (std::size_t si = 0; si < opt.clique_sizes.size(); ++si) {
    const std::size_t m = opt.clique_sizes[si];
    const Graph g = gen_lollipop(m);
    const std::string name = "lollipop_m" + std::to_string(m) + "_n" + std::to_string(2 * m);
    for (std::size_t wi = 0; wi < walks.size(); ++wi) {
      WalkConfig cfg = walks[wi];
      cfg.seed = mix64(opt.seed) ^ mix64((std::uint64_t{si} << 16) + wi);
      if (opt.full_scan) {
        for (CoverMode mode : {CoverMode::Vertex, CoverMode::Edge}) {
          out.rows.push_back(make_row(name, cfg, estimate_cover_time(g, cfg, mode, opt.trials,
                                                                     WorstOverStarts{},
                                                                     opt.threads)));
        }
      } else {
        // Vertex and edge times come from the same trajectories.
        const auto j = estimate_joint_cover_time(g, cfg, opt.trials, kLollipopStart, opt.threads);
        out.rows.push_back(make_row(name, cfg, j.vertex));
        out.rows.push_back(make_row(name, cfg, j.edge));
        out.gaps.push_back({name, describe(cfg), j.gap_mean, j.gap_std_err});
      }
    }
  }
  return out;
}

struct Sr16Options {
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// MDLR + non-backtracking walk used on the 16-vertex strongly regular pair.
inline WalkConfig sr16_walk() {
  WalkConfig cfg;
  cfg.conductance = MdlrConductance{};
  cfg.non_backtracking = true;
  return cfg;
}

/// Cover times on the rook's and Shrikhande graphs with uniformly random starts,
/// `trials` per graph, plus their average ("sr16" rows). Modes: vertex, edge
/// (one direction) and arc (both directions).
inline std::vector<CoverRow> run_sr16(const Sr16Options& opt) {
  const Graph graphs[2] = {gen_rook4x4(), gen_shrikhande()};
  const char* names[2] = {"rook4x4", "shrikhande"};
  std::vector<CoverRow> rows;
  for (CoverMode mode : {CoverMode::Vertex, CoverMode::Edge, CoverMode::Arc}) {
    CoverRow avg{"sr16", describe(sr16_walk()), mode, 0.0, 0.0, 0, 0};
    double var = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      WalkConfig cfg = sr16_walk();
      cfg.seed = mix64(opt.seed) ^ mix64(i);
      const auto s = estimate_cover_time(graphs[i], cfg, mode, opt.trials, UniformStart{},
                                         opt.threads);
      rows.push_back(make_row(names[i], cfg, s));
      avg.mean += 0.5 * s.mean;
      var += 0.25 * s.std_err * s.std_err;
      avg.trials += s.trials;
      avg.censored += s.censored;
    }
    avg.std_err = std::sqrt(var);
    rows.push_back(avg);
  }
  return rows;
}

}  // namespace rwlab

#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "rwlab/cover.hpp"
#include "rwlab/generators.hpp"
#include "rwlab/invariance.hpp"
#include "rwlab/reconstruct.hpp"

namespace rwlab {
namespace {

Graph graph_of(std::size_t n, std::vector<Edge> edges) { return build_graph(edges, n); }

TEST(Decode, SpecExamples) {
  EXPECT_EQ(decode(parse("1-2-3-1")).graph, gen_cycle(3));
  EXPECT_EQ(decode(parse("1-2-3#1-4#1#2")).graph, gen_clique(4));
  EXPECT_EQ(decode(parse("1-2;1-3")).graph, graph_of(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(decode(parse("1")).graph.num_vertices(), 1u);
}

TEST(Isomorphism, Basics) {
  EXPECT_TRUE(is_isomorphic(gen_cycle(3), gen_clique(3)));
  EXPECT_FALSE(is_isomorphic(gen_rook4x4(), gen_shrikhande()));
  EXPECT_TRUE(is_isomorphic(gen_rook4x4(), gen_rook4x4()));
  EXPECT_FALSE(is_isomorphic(gen_path(4), gen_star(3)));
  EXPECT_FALSE(is_isomorphic(gen_path(4), gen_path(5)));
  // same degree sequence (all 2), different structure
  const Graph two_triangles = Graph::from_edges_relaxed(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(is_isomorphic(gen_cycle(6), two_triangles));
  EXPECT_THROW(is_isomorphic(gen_path(17), gen_path(17)), GuardError);
}

TEST(Isomorphism, RandomRelabelings) {
  Rng rng(5);
  for (const Graph& g : {gen_shrikhande(), gen_rook4x4(), gen_csl(13, 5), gen_barbell(5),
                         gen_lollipop(6)}) {
    for (int i = 0; i < 10; ++i) {
      EXPECT_TRUE(is_isomorphic(g, apply_permutation(g, Permutation::random(g.num_vertices(), rng))));
    }
  }
}

TEST(Isomorphism, CslSkipsDistinguished) {
  // For prime n, circulants are isomorphic iff their connection sets differ by a unit multiple.
  EXPECT_TRUE(is_isomorphic(gen_csl(13, 2), gen_csl(13, 6)));  // 2 * 6 = 12 = -1 (mod 13)
  EXPECT_FALSE(is_isomorphic(gen_csl(11, 2), gen_csl(11, 3)));
}

TEST(Reconstruction, SpecCases) {
  WalkConfig k2;
  k2.length = 1;
  const auto r = check_reconstruction(gen_clique(2), k2, 100);
  EXPECT_EQ(r.coverage_fraction(), 1.0);
  EXPECT_EQ(r.failures, 0u);

  WalkConfig tri;
  tri.length = 4;
  tri.seed = 2;
  const auto t = check_reconstruction(gen_cycle(3), tri, 1000);
  EXPECT_GT(t.covered, 0u);
  EXPECT_EQ(t.failures, 0u);
  EXPECT_EQ(t.invented_edges, 0u);
}

TEST(Reconstruction, CslMarkovBound) {
  const Graph g = gen_csl(8, 3);
  WalkConfig cfg;
  cfg.seed = 17;
  const auto cv = estimate_cover_time(g, cfg, CoverMode::Vertex, 2000, WorstOverStarts{});
  cfg.length = static_cast<std::size_t>(std::ceil(10.0 * cv.mean));
  const auto r = check_reconstruction(g, cfg, 2000);
  EXPECT_GT(r.coverage_fraction(), 0.9);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.invented_edges, 0u);
}

// Decoding reproduces exactly the recorded subgraph under the anonymous names,
// and a covering walk reconstructs the whole graph.
TEST(Reconstruction, FuzzedDecodingClaims) {
  Rng rng(2024);
  std::size_t covering_named = 0;
  std::size_t covering_anon = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    const Graph g = random_connected_graph(n, rng);
    WalkConfig cfg;
    cfg.length = rng.below(60);
    cfg.non_backtracking = rng.bernoulli(0.5);
    if (rng.bernoulli(0.3)) cfg.restart = RestartProb{0.25};
    cfg.seed = trial;
    const Walk w = sample_walk(g, cfg);
    const auto ids = anonymous_ids(w, n);

    for (RecordScheme scheme : {RecordScheme::Anonymized, RecordScheme::NamedNeighbors}) {
      const Record rec = make_record(w, g, scheme);
      const Graph decoded = decode(rec).graph;

      // Ground-truth recorded subgraph in anonymous names.
      std::set<Edge> truth;
      std::set<Vertex> visited(w.vertices.begin(), w.vertices.end());
      for (std::size_t t = 1; t < w.vertices.size(); ++t) {
        if (!w.restart_flags[t - 1]) {
          truth.insert(Edge::canonical(ids[w.vertices[t - 1]] - 1, ids[w.vertices[t]] - 1));
        }
      }
      if (scheme == RecordScheme::NamedNeighbors) {
        for (Vertex a : visited)
          for (Vertex b : visited)
            if (a < b && g.has_edge(a, b)) truth.insert(Edge::canonical(ids[a] - 1, ids[b] - 1));
      }
      const auto got = decoded.edges();
      ASSERT_EQ(std::set<Edge>(got.begin(), got.end()), truth);
      ASSERT_EQ(decoded.num_vertices(), visited.size());

      if (scheme == RecordScheme::NamedNeighbors && visited.size() == n) {
        ++covering_named;
        ASSERT_TRUE(is_isomorphic(decoded, g));
      }
      if (scheme == RecordScheme::Anonymized && truth.size() == g.num_edges()) {
        ++covering_anon;
        ASSERT_TRUE(is_isomorphic(decoded, g));
      }
    }
  }
  EXPECT_GT(covering_named, 100u);
  EXPECT_GT(covering_anon, 50u);
}

}  // namespace
}  // namespace rwlab

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "rwlab/attributed.hpp"
#include "rwlab/generators.hpp"
#include "rwlab/record.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {
namespace {

Walk make_walk(std::vector<Vertex> vs, std::vector<bool> flags = {}) {
  Walk w;
  w.vertices = std::move(vs);
  w.restart_flags = flags.empty() ? std::vector<bool>(w.vertices.size() - 1, false) : flags;
  return w;
}

std::string anon(const Walk& w) { return serialize(record_anonymized(w)); }
std::string named(const Walk& w, const Graph& g) { return serialize(record_named_neighbors(w, g)); }

TEST(Anonymized, SpecExamples) {
  EXPECT_EQ(anon(make_walk({7, 4, 9, 7})), "1-2-3-1");
  EXPECT_EQ(anon(make_walk({5})), "1");
  EXPECT_EQ(anon(make_walk({2, 0, 2, 1}, {false, true, false})), "1-2;1-3");
}

TEST(Anonymized, MultiDigitIds) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; v < 12; ++v) vs.push_back(v);
  EXPECT_EQ(anon(make_walk(vs)), "1-2-3-4-5-6-7-8-9-10-11-12");
}

TEST(NamedNeighbors, SpecExamples) {
  EXPECT_EQ(named(make_walk({0, 1, 2, 3}), gen_clique(4)), "1-2-3#1-4#1#2");
  EXPECT_EQ(named(make_walk({3, 1, 0, 2}), gen_clique(4)), "1-2-3#1-4#1#2");
  EXPECT_EQ(named(make_walk({0, 1, 2, 0}), gen_cycle(3)), "1-2-3#1-1");
  EXPECT_EQ(named(make_walk({0, 1}), gen_path(2)), "1-2");
}

TEST(NamedNeighbors, RestartsEmitNoNeighbors) {
  // star-plus-edge: 0 center, leaves 1 2 3, extra edge 1-2
  const Graph g = gen_star_plus_edge();
  EXPECT_EQ(named(make_walk({1, 0, 1, 2}, {false, true, false}), g), "1-2;1-3#2");
  EXPECT_EQ(named(make_walk({0, 1, 2, 0}), g), "1-2-3#1-1");
}

TEST(Record, ParseSpecExamples) {
  const Record r = parse("1-2;1");
  ASSERT_EQ(r.tokens.size(), 3u);
  EXPECT_EQ(r.tokens[0], (Token{TokenKind::Step, 1}));
  EXPECT_EQ(r.tokens[1], (Token{TokenKind::Step, 2}));
  EXPECT_EQ(r.tokens[2], (Token{TokenKind::Restart, 1}));
  EXPECT_EQ(serialize(parse("1-2-3#1-4#1#2")), "1-2-3#1-4#1#2");
  EXPECT_THROW(parse("1-3"), ParseError);
}

TEST(Record, ParseRejectsMalformed) {
  for (const char* bad : {"", "2", "0", "1-", "1--2", "1-02", "1x2", "1-2 ", "1#2", "1-2;2",
                          "1-1", "1-2#2", "1-2;1#2", "1-2;3", "1-99999999999"}) {
    EXPECT_THROW(parse(bad), ParseError) << '"' << bad << '"';
  }
}

TEST(Record, FuzzedRoundTripAndInvariants) {
  const std::vector<Graph> graphs{gen_lollipop(4), gen_csl(11, 3), gen_rook4x4(), gen_star(6)};
  for (const Graph& g : graphs) {
    for (const RestartRule& r : {RestartRule{NoRestart{}}, RestartRule{RestartProb{0.2}}}) {
      WalkConfig cfg;
      cfg.length = 25;
      cfg.restart = r;
      cfg.seed = 99;
      const WalkSampler sampler(g, cfg);
      for (std::uint64_t i = 0; i < 200; ++i) {
        const Walk w = sampler.sample(std::nullopt, i);
        for (RecordScheme scheme : {RecordScheme::Anonymized, RecordScheme::NamedNeighbors}) {
          const Record rec = make_record(w, g, scheme);
          const std::string text = serialize(rec);
          ASSERT_EQ(parse(text), rec) << text;
          std::uint32_t max_id = 0;
          ASSERT_EQ(rec.tokens.front(), (Token{TokenKind::Step, 1}));
          for (const Token& t : rec.tokens) {
            ASSERT_LE(t.id, max_id + 1);
            max_id = std::max(max_id, t.id);
          }
          std::size_t steps = 0;
          for (const Token& t : rec.tokens) steps += t.kind != TokenKind::Neighbor;
          ASSERT_EQ(steps, w.vertices.size());
        }
      }
    }
  }
}

TEST(Attributed, TwoVertexWalk) {
  AttributeProvider attrs;
  attrs.vertex_text = {{0, "A"}, {1, "B"}};
  const std::string z = record_attributed(make_walk({0, 1}), gen_path(2), attrs);
  EXPECT_EQ(z, "Paper 1 - Title: A Paper 1 is linked to Paper 2 - Title: B");
}

TEST(Attributed, DirectionsLabelsRestartsAndNeighbors) {
  const Graph g = gen_cycle(3);
  AttributeProvider attrs;
  attrs.vertex_text = {{0, "Zero"}, {1, "One"}, {2, "Two"}};
  attrs.labels = {{0, "hidden"}, {2, "cs.LG"}};
  attrs.edge_direction = std::set<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}, {2, 0}};
  const Walk w = make_walk({0, 1, 0, 2}, {false, true, false});
  const std::string z = record_attributed(w, g, attrs);
  EXPECT_EQ(z,
            "Paper 1 - Title: Zero Paper 1 cites Paper 2 - Title: One Restart at Paper 1. "
            "Paper 1 is cited by Paper 3 - Title: Two, Category: cs.LG Paper 3 cites Paper 2.");
  EXPECT_EQ(z.find("hidden"), std::string::npos);
}

TEST(Attributed, RevisitAndCustomTemplate) {
  AttributeProvider attrs;
  attrs.vertex_text = {{0, "a"}, {1, "b"}};
  AttributedTemplate tpl;
  tpl.entity = "Node";
  tpl.text_field = "Text";
  EXPECT_EQ(record_attributed(make_walk({0, 1, 0}), gen_path(2), attrs, tpl),
            "Node 1 - Text: a Node 1 is linked to Node 2 - Text: b Node 2 is linked to Node 1.");
}

TEST(Attributed, MissingTextIsAnError) {
  AttributeProvider attrs;
  attrs.vertex_text = {{0, "a"}};
  EXPECT_THROW(record_attributed(make_walk({0, 1}), gen_path(2), attrs), ConfigError);
}

TEST(Attributed, ReadAttributeFile) {
  std::istringstream in("# comment\n0\tFirst title\tcs.AI\n\n1\tSecond\n");
  const AttributeProvider a = read_attributes(in);
  EXPECT_EQ(a.vertex_text.at(0), "First title");
  EXPECT_EQ(a.labels.at(0), "cs.AI");
  EXPECT_EQ(a.vertex_text.at(1), "Second");
  EXPECT_FALSE(a.labels.contains(1));
  std::istringstream dirs("0 1\n2 1\n");
  EXPECT_EQ(read_directions(dirs), (std::set<std::pair<Vertex, Vertex>>{{0, 1}, {2, 1}}));
}

}  // namespace
}  // namespace rwlab

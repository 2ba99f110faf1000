#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rwlab/graph.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

enum class TokenKind : std::uint8_t { Step, Restart, Neighbor };

/// One record token. Ids are anonymized names (1 = start vertex).
struct Token {
  TokenKind kind = TokenKind::Step;
  std::uint32_t id = 1;

  friend auto operator<=>(const Token&, const Token&) = default;
};

/// Machine-readable walk record. The first token is always Step(1); a fresh id
/// is always one more than the largest id seen so far.
struct Record {
  std::vector<Token> tokens;

  friend bool operator==(const Record&, const Record&) = default;
};

enum class RecordScheme { Anonymized, NamedNeighbors };

inline constexpr char separator(TokenKind kind) {
  switch (kind) {
    case TokenKind::Step: return '-';
    case TokenKind::Restart: return ';';
    case TokenKind::Neighbor: return '#';
  }
  return '?';
}

/// Text form: id ("-" id | ";" id | "#" id)*, e.g. "1-2-3#1-4#1#2".
inline std::string serialize(const Record& rec) {
  std::string out;
  out.reserve(rec.tokens.size() * 3);
  for (std::size_t i = 0; i < rec.tokens.size(); ++i) {
    if (i > 0) out.push_back(separator(rec.tokens[i].kind));
    out += std::to_string(rec.tokens[i].id);
  }
  return out;
}

inline Record parse(std::string_view text) {
  Record rec;
  std::uint32_t max_id = 0;
  std::uint32_t current = 0;  // id of the vertex the walk is at
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("record: " + why + " at offset " + std::to_string(pos));
  };
  while (pos < text.size() || rec.tokens.empty()) {
    TokenKind kind = TokenKind::Step;
    if (!rec.tokens.empty()) {
      switch (text[pos]) {
        case '-': kind = TokenKind::Step; break;
        case ';': kind = TokenKind::Restart; break;
        case '#': kind = TokenKind::Neighbor; break;
        default: throw fail(std::string("unexpected character '") + text[pos] + "'");
      }
      ++pos;
    }
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first == last || *first < '0' || *first > '9') throw fail("expected a vertex id");
    if (*first == '0') throw fail("ids are positive and unpadded");
    std::uint32_t id = 0;
    const auto [ptr, ec] = std::from_chars(first, last, id);
    if (ec != std::errc{}) throw fail("vertex id out of range");
    pos += static_cast<std::size_t>(ptr - first);

    if (rec.tokens.empty() && id != 1) throw fail("record must start at id 1");
    if (id > max_id + 1) {
      throw fail("id " + std::to_string(id) + " introduced before " + std::to_string(max_id + 1));
    }
    if (id == max_id + 1 && kind != TokenKind::Step) {
      throw fail("only walk steps may introduce a new id");
    }
    switch (kind) {
      case TokenKind::Step:
        if (!rec.tokens.empty() && id == current) throw fail("step to the current vertex");
        current = id;
        break;
      case TokenKind::Restart:
        if (id != 1) throw fail("restart must return to id 1");
        current = 1;
        break;
      case TokenKind::Neighbor:
        if (rec.tokens.back().kind == TokenKind::Restart) {
          throw fail("named neighbors must follow a walk step");
        }
        if (id == current) throw fail("vertex named as its own neighbor");
        break;
    }
    max_id = std::max(max_id, id);
    rec.tokens.push_back({kind, id});
  }
  return rec;
}

namespace detail {

class Namer {
 public:
  explicit Namer(std::size_t n) : id_(n, 0) {}
  std::uint32_t name(Vertex v) {
    if (id_[v] == 0) id_[v] = ++count_;
    return id_[v];
  }
  std::uint32_t id(Vertex v) const { return id_[v]; }

 private:
  std::vector<std::uint32_t> id_;
  std::uint32_t count_ = 0;
};

inline std::size_t walk_span(const Walk& walk) {
  Vertex hi = 0;
  for (Vertex v : walk.vertices) hi = std::max(hi, v);
  return static_cast<std::size_t>(hi) + 1;
}

}  // namespace detail

/// Anonymization: vertices are named 1, 2, ... in order of first discovery.
inline Record record_anonymized(const Walk& walk) {
  Record rec;
  if (walk.vertices.empty()) return rec;
  detail::Namer names(detail::walk_span(walk));
  rec.tokens.reserve(walk.vertices.size());
  rec.tokens.push_back({TokenKind::Step, names.name(walk.vertices[0])});
  for (std::size_t t = 1; t < walk.vertices.size(); ++t) {
    const auto kind = walk.restart_flags[t - 1] ? TokenKind::Restart : TokenKind::Step;
    rec.tokens.push_back({kind, names.name(walk.vertices[t])});
  }
  return rec;
}

/// Anonymization plus named neighbors: after each walk step to v, every
/// already-named neighbor u of v whose edge (v, u) is not yet recorded is
/// emitted in ascending id order, so visiting a vertex set records its whole
/// induced subgraph.
inline Record record_named_neighbors(const Walk& walk, const Graph& g) {
  Record rec;
  if (walk.vertices.empty()) return rec;
  detail::Namer names(g.num_vertices());
  std::vector<bool> recorded(g.num_edges(), false);
  std::vector<std::pair<std::uint32_t, std::size_t>> named;  // (id, edge index)

  rec.tokens.push_back({TokenKind::Step, names.name(walk.vertices[0])});
  for (std::size_t t = 1; t < walk.vertices.size(); ++t) {
    const Vertex v = walk.vertices[t];
    const std::uint32_t id = names.name(v);
    if (walk.restart_flags[t - 1]) {
      rec.tokens.push_back({TokenKind::Restart, id});
      continue;
    }
    const auto arc = g.arc_index(walk.vertices[t - 1], v);
    if (!arc) throw GraphError("walk steps along a non-edge at t = " + std::to_string(t));
    rec.tokens.push_back({TokenKind::Step, id});
    recorded[g.edge_of_arc(*arc)] = true;

    named.clear();
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (const auto uid = names.id(nb[i]); uid != 0) {
        named.emplace_back(uid, g.edge_of_arc(g.arc_begin(v) + i));
      }
    }
    std::sort(named.begin(), named.end());
    for (const auto& [uid, edge] : named) {
      if (!recorded[edge]) {
        rec.tokens.push_back({TokenKind::Neighbor, uid});
        recorded[edge] = true;
      }
    }
  }
  return rec;
}

inline Record make_record(const Walk& walk, const Graph& g, RecordScheme scheme) {
  return scheme == RecordScheme::Anonymized ? record_anonymized(walk)
                                            : record_named_neighbors(walk, g);
}

}  // namespace rwlab

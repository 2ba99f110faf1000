#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rwlab/graph.hpp"
#include "rwlab/walk.hpp"

namespace rwlab {

/// Opaque per-vertex and per-edge text used by the attributed recorder.
struct AttributeProvider {
  std::map<Vertex, std::string> vertex_text;
  /// Directed links: (u, v) present means "u <forward_link> v". When absent,
  /// every edge is rendered with the undirected link word.
  std::optional<std::set<std::pair<Vertex, Vertex>>> edge_direction;
  std::map<Vertex, std::string> labels;
};

/// Wording of the attributed record. Defaults reproduce the citation-network
/// phrasing ("Paper 1 cites Paper 2", "Restart at Paper 1.").
struct AttributedTemplate {
  std::string entity = "Paper";
  std::string text_field = "Title";
  std::string label_field = "Category";
  std::string forward_link = "cites";
  std::string backward_link = "is cited by";
  std::string undirected_link = "is linked to";
};

/// Natural-language record with anonymized names, named neighbors, vertex text
/// on first visit and labels for labeled vertices. The start vertex's label is
/// never written: it is the query vertex whose label is being predicted.
inline std::string record_attributed(const Walk& walk, const Graph& g,
                                     const AttributeProvider& attrs,
                                     const AttributedTemplate& tpl = {}) {
  if (walk.vertices.empty()) return {};
  std::vector<std::uint32_t> id(g.num_vertices(), 0);
  std::uint32_t named_count = 0;
  std::set<Edge> recorded;

  auto text_of = [&](Vertex v) -> const std::string& {
    const auto it = attrs.vertex_text.find(v);
    if (it == attrs.vertex_text.end()) {
      throw ConfigError("no vertex text for visited vertex " + std::to_string(v));
    }
    return it->second;
  };
  auto paper = [&](std::uint32_t i) { return tpl.entity + " " + std::to_string(i); };
  auto link = [&](Vertex a, Vertex b) -> const std::string& {
    if (!attrs.edge_direction) return tpl.undirected_link;
    return attrs.edge_direction->contains({a, b}) ? tpl.forward_link : tpl.backward_link;
  };

  std::ostringstream z;
  const Vertex v0 = walk.vertices[0];
  id[v0] = ++named_count;
  z << paper(1) << " - " << tpl.text_field << ": " << text_of(v0);

  for (std::size_t t = 1; t < walk.vertices.size(); ++t) {
    const Vertex v = walk.vertices[t];
    const bool fresh = id[v] == 0;
    if (fresh) id[v] = ++named_count;
    if (walk.restart_flags[t - 1]) {
      z << " Restart at " << paper(1) << '.';
      continue;
    }
    const Vertex prev = walk.vertices[t - 1];
    if (!g.has_edge(prev, v)) throw GraphError("walk steps along a non-edge");
    z << ' ' << paper(id[prev]) << ' ' << link(prev, v) << ' ' << paper(id[v]);
    recorded.insert(Edge::canonical(prev, v));
    if (fresh) {
      z << " - " << tpl.text_field << ": " << text_of(v);
      if (const auto it = attrs.labels.find(v); it != attrs.labels.end()) {
        z << ", " << tpl.label_field << ": " << it->second;
      }
    } else {
      z << '.';
    }
    std::vector<std::pair<std::uint32_t, Vertex>> named;
    for (Vertex u : g.neighbors(v)) {
      if (id[u] != 0) named.emplace_back(id[u], u);
    }
    std::sort(named.begin(), named.end());
    for (const auto& [uid, u] : named) {
      if (recorded.insert(Edge::canonical(v, u)).second) {
        z << ' ' << paper(id[v]) << ' ' << link(v, u) << ' ' << paper(uid) << '.';
      }
    }
  }
  return z.str();
}

/// Reads "vertex<TAB>text[<TAB>label]" lines. Blank lines and lines starting
/// with '#' are skipped.
inline AttributeProvider read_attributes(std::istream& in) {
  AttributeProvider attrs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab1 = line.find('\t');
    if (tab1 == std::string::npos) {
      throw ConfigError("attributes line " + std::to_string(lineno) + ": expected vertex<TAB>text");
    }
    long long v = -1;
    try {
      v = std::stoll(line.substr(0, tab1));
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0) throw ConfigError("attributes line " + std::to_string(lineno) + ": bad vertex id");
    const auto tab2 = line.find('\t', tab1 + 1);
    const auto vid = static_cast<Vertex>(v);
    attrs.vertex_text[vid] = line.substr(tab1 + 1, tab2 == std::string::npos ? std::string::npos
                                                                              : tab2 - tab1 - 1);
    if (tab2 != std::string::npos) attrs.labels[vid] = line.substr(tab2 + 1);
  }
  return attrs;
}

/// Reads directed links, one "u v" pair per line (u links forward to v).
inline std::set<std::pair<Vertex, Vertex>> read_directions(std::istream& in) {
  std::set<std::pair<Vertex, Vertex>> arcs;
  long long u = 0;
  long long v = 0;
  while (in >> u >> v) {
    if (u < 0 || v < 0) throw ConfigError("directions: negative vertex id");
    arcs.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) throw ConfigError("directions: expected whitespace-separated vertex pairs");
  return arcs;
}

}  // namespace rwlab

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ESSPLIT_GRAPH_HPP_
#define ESSPLIT_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essplit/errors.hpp"
#include "essplit/es_splitting.hpp"
#include "essplit/gf2.hpp"
#include "essplit/label_set.hpp"
#include "essplit/matroid.hpp"

namespace essplit::graph {

struct Edge {
  std::string label;
  std::string u;
  std::string v;

  bool is_loop() const { return u == v; }
  bool touches(const std::string& vertex) const { return u == vertex || v == vertex; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Multigraph with named vertices and labelled edges. Loops and parallel
// edges are allowed.
class LabeledGraph {
 public:
  void add_vertex(const std::string& name) {
    if (vertex_index_.emplace(name, vertices_.size()).second) vertices_.push_back(name);
  }

  void add_edge(const std::string& label, const std::string& u, const std::string& v) {
    if (label.empty()) throw PreconditionViolated("empty edge label");
    if (!edge_index_.emplace(label, edges_.size()).second) throw LabelCollision(label);
    add_vertex(u);
    add_vertex(v);
    edges_.push_back({label, u, v});
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_vertex(const std::string& name) const { return vertex_index_.count(name) != 0; }
  bool has_edge(const std::string& label) const { return edge_index_.count(label) != 0; }

  const Edge& edge(const std::string& label) const {
    auto it = edge_index_.find(label);
    if (it == edge_index_.end()) throw UnknownLabel(label);
    return edges_[it->second];
  }
  std::size_t vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) throw UnknownLabel(name);
    return it->second;
  }

  // Incidences at a vertex; a loop counts twice.
  std::size_t degree(const std::string& vertex) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.u == vertex) + (e.v == vertex);
    return d;
  }

  std::vector<std::string> edge_labels() const {
    std::vector<std::string> out;
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

// One edge per line: "label u v". Lines starting with '#' and blank lines
// are skipped; vertices are declared in order of first appearance.
inline LabeledGraph parse_graph(std::istream& in, const std::string& source = "<input>") {
  LabeledGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> fields;
    for (std::string w; words >> w;) fields.push_back(w);
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (fields.size() != 3) {
      throw ParseError(where + "expected 'label u v', found " + std::to_string(fields.size()) +
                       " fields");
    }
    if (g.has_edge(fields[0])) throw ParseError(where + "duplicate edge label '" + fields[0] + "'");
    g.add_edge(fields[0], fields[1], fields[2]);
  }
  return g;
}

inline LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline std::string format_graph(const LabeledGraph& g) {
  std::ostringstream out;
  for (const auto& e : g.edges()) out << e.label << ' ' << e.u << ' ' << e.v << '\n';
  return out.str();
}

// Vertex-by-edge incidence matrix over GF(2), columns in edge order. A loop
// meets its vertex twice, so its column is zero.
inline gf2::GF2Matrix incidence_matrix(const LabeledGraph& g) {
  std::vector<gf2::Word> rows(g.vertices().size(), 0);
  for (std::size_t c = 0; c < g.edges().size(); ++c) {
    const Edge& e = g.edges()[c];
    if (c >= kMaxGroundSize) throw GroundSetTooLarge(g.edges().size(), kMaxGroundSize);
    rows[g.vertex_index(e.u)] ^= gf2::Word{1} << c;
    rows[g.vertex_index(e.v)] ^= gf2::Word{1} << c;
  }
  return gf2::GF2Matrix(Ground(g.edge_labels()), std::move(rows));
}

inline BinaryMatroid cycle_matroid(const LabeledGraph& g, EnumerationCaps caps = {}) {
  return BinaryMatroid(incidence_matrix(g), caps);
}

// Which edges at the split vertex go to each of the two new vertices. The
// anchor edge stays with u1 together with left_edges.
struct LineSplitSpec {
  std::string split_vertex;
  std::string anchor_edge;
  std::vector<std::string> left_edges;
  std::vector<std::string> right_edges;
};

struct LineSplitLabels {
  std::string u1 = "u1";
  std::string u2 = "u2";
  std::string a = "a";
  std::string gamma = "gamma";
};

// Endpoint of the anchor edge other than the split vertex.
inline const std::string& anchor_far_end(const LabeledGraph& g, const LineSplitSpec& spec) {
  const Edge& anchor = g.edge(spec.anchor_edge);
  return anchor.u == spec.split_vertex ? anchor.v : anchor.u;
}

inline void validate(const LabeledGraph& g, const LineSplitSpec& spec) {
  const std::string& u = spec.split_vertex;
  if (!g.has_vertex(u)) throw InvalidPartition("unknown split vertex '" + u + "'");
  if (!g.has_edge(spec.anchor_edge)) {
    throw InvalidPartition("unknown anchor edge '" + spec.anchor_edge + "'");
  }
  const Edge& anchor = g.edge(spec.anchor_edge);
  if (!anchor.touches(u) || anchor.is_loop()) {
    throw InvalidPartition("anchor edge must join the split vertex to another vertex");
  }
  std::set<std::string> incident;
  for (const auto& e : g.edges()) {
    if (!e.touches(u)) continue;
    if (e.is_loop()) throw InvalidPartition("loop '" + e.label + "' at the split vertex");
    incident.insert(e.label);
  }
  std::set<std::string> assigned = {spec.anchor_edge};
  for (const auto* side : {&spec.left_edges, &spec.right_edges}) {
    for (const auto& label : *side) {
      if (!incident.count(label)) {
        throw InvalidPartition("edge '" + label + "' is not incident to the split vertex");
      }
      if (!assigned.insert(label).second) {
        throw InvalidPartition("edge '" + label + "' assigned twice");
      }
    }
  }
  if (assigned != incident) {
    throw InvalidPartition("partition does not cover every edge at the split vertex");
  }
}

// Replaces u by adjacent vertices u1 and u2 joined by edge a. The anchor
// edge e = uv and left_edges move to u1, right_edges move to u2, and a new
// edge gamma joins u2 to v.
inline LabeledGraph n_line_split(const LabeledGraph& g, const LineSplitSpec& spec,
                                 const LineSplitLabels& labels = {}) {
  validate(g, spec);
  const std::string& u = spec.split_vertex;
  for (const auto& name : {labels.u1, labels.u2}) {
    if (g.has_vertex(name) && name != u) throw LabelCollision(name);
  }
  if (labels.u1 == labels.u2) throw LabelCollision(labels.u2);
  for (const auto& name : {labels.a, labels.gamma}) {
    if (g.has_edge(name)) throw LabelCollision(name);
  }
  if (labels.a == labels.gamma) throw LabelCollision(labels.gamma);

  const std::set<std::string> to_u2(spec.right_edges.begin(), spec.right_edges.end());
  LabeledGraph h;
  for (const auto& vertex : g.vertices()) {
    if (vertex == u) {
      h.add_vertex(labels.u1);
      h.add_vertex(labels.u2);
    } else {
      h.add_vertex(vertex);
    }
  }
  for (const auto& e : g.edges()) {
    const std::string& side = to_u2.count(e.label) ? labels.u2 : labels.u1;
    h.add_edge(e.label, e.u == u ? side : e.u, e.v == u ? side : e.v);
  }
  h.add_edge(labels.a, labels.u1, labels.u2);
  h.add_edge(labels.gamma, labels.u2, anchor_far_end(g, spec));
  return h;
}

// Circuits as sorted label lists, for comparing matroids on equal label sets
// whose column orders differ.
inline std::set<std::vector<std::string>> circuit_label_sets(const BinaryMatroid& m) {
  std::set<std::vector<std::string>> out;
  for (LabelSet c : m.circuits()) {
    auto names = m.ground().names(c);
    std::sort(names.begin(), names.end());
    out.insert(std::move(names));
  }
  return out;
}

// Compares the cycle matroid of the line-split graph with the es-splitting
// of the cycle matroid of g for X = {anchor} + left_edges.
inline bool verify_equivalence(const LabeledGraph& g, const LineSplitSpec& spec,
                               const LineSplitLabels& labels = {}) {
  const LabeledGraph h = n_line_split(g, spec, labels);
  const BinaryMatroid graph_side = cycle_matroid(h);

  std::vector<std::string> x_labels = spec.left_edges;
  x_labels.push_back(spec.anchor_edge);
  const SplitContext ctx = SplitContext::from_labels(cycle_matroid(g), x_labels,
                                                     spec.anchor_edge,
                                                     SplitLabels{labels.a, labels.gamma});
  return circuit_label_sets(graph_side) == circuit_label_sets(ctx.split());
}

}  // namespace essplit::graph

#endif  // ESSPLIT_GRAPH_HPP_

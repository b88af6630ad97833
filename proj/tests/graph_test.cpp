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

#include "essplit/graph.hpp"

#include <set>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "essplit/figure2.hpp"
#include "random_instances.hpp"

namespace essplit::graph {
namespace {

// Number of connected components by union-find over the edge list.
std::size_t components(const LabeledGraph& g) {
  std::vector<std::size_t> parent(g.vertices().size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = parent.size();
  for (const auto& e : g.edges()) {
    const std::size_t a = find(g.vertex_index(e.u));
    const std::size_t b = find(g.vertex_index(e.v));
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Spoke graph: u joined to v by e and to x1..x3, y1..y3, with a rim path
// through the spokes' far ends and v.
LabeledGraph spoke_graph() {
  return parse_graph(std::string(
      "e u v\n"
      "s1 u x1\n"
      "s2 u x2\n"
      "s3 u x3\n"
      "t1 u y1\n"
      "t2 u y2\n"
      "t3 u y3\n"
      "r1 x1 x2\n"
      "r2 x2 x3\n"
      "r3 x3 v\n"
      "r4 v y1\n"
      "r5 y1 y2\n"
      "r6 y2 y3\n"));
}

LineSplitSpec spoke_spec() { return {"u", "e", {"s1", "s2", "s3"}, {"t1", "t2", "t3"}}; }

TEST(ParseGraph, ReadsEdgesAndSkipsComments) {
  const LabeledGraph g = parse_graph(std::string("# c\n\np A B\nq B C\n  # d\nr C C\n"));
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(g.edge_labels(), (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_TRUE(g.edge("r").is_loop());
  EXPECT_EQ(g.degree("C"), 3u);
  EXPECT_EQ(format_graph(g), "p A B\nq B C\nr C C\n");
}

TEST(ParseGraph, Errors) {
  try {
    parse_graph(std::string("p A B\nq A\n"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find(":2:"), std::string::npos) << err.what();
  }
  EXPECT_THROW(parse_graph(std::string("p A B\np B C\n")), ParseError);
  LabeledGraph g;
  g.add_edge("p", "A", "B");
  EXPECT_THROW(g.add_edge("p", "B", "C"), LabelCollision);
}

TEST(Incidence, SingleEdgeAndLoop) {
  LabeledGraph g;
  g.add_edge("p", "A", "B");
  g.add_edge("z", "B", "B");
  const gf2::GF2Matrix m = incidence_matrix(g);
  EXPECT_EQ(m.n_rows(), 2u);
  EXPECT_TRUE(m.at(0, 0));
  EXPECT_TRUE(m.at(1, 0));
  EXPECT_TRUE(m.column(1).is_zero());
  EXPECT_TRUE(cycle_matroid(g).is_circuit(m.columns().parse({"z"})));
}

TEST(Incidence, Figure2Data) {
  const gf2::GF2Matrix m = incidence_matrix(figure2::graph());
  EXPECT_EQ(m.col_labels(),
            (std::vector<std::string>{"1", "2", "3", "4", "5", "6", "x", "y"}));
  EXPECT_EQ(gf2::rank(m), 4u);
}

TEST(Incidence, RankIsVerticesMinusComponents) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    // Possibly disconnected, with loops and parallel edges.
    LabeledGraph g;
    const std::size_t n = testing::uniform(rng, 1, 8);
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    const std::size_t edges = testing::uniform(rng, 0, 12);
    for (std::size_t i = 0; i < edges; ++i) {
      g.add_edge("f" + std::to_string(i), "v" + std::to_string(testing::uniform(rng, 0, n - 1)),
                 "v" + std::to_string(testing::uniform(rng, 0, n - 1)));
    }
    ASSERT_EQ(gf2::rank(incidence_matrix(g)), n - components(g)) << format_graph(g);
  }
}

TEST(Incidence, CircuitsOfATriangleWithParallelEdge) {
  const LabeledGraph g = parse_graph(std::string("p A B\nq B C\nr C A\ns A B\n"));
  const BinaryMatroid m = cycle_matroid(g);
  const auto circuits = circuit_label_sets(m);
  EXPECT_EQ(circuits, (std::set<std::vector<std::string>>{
                          {"p", "q", "r"}, {"p", "s"}, {"q", "r", "s"}}));
}

TEST(LineSplit, Figure2) {
  const LabeledGraph h = n_line_split(figure2::graph(), figure2::line_split());
  EXPECT_FALSE(h.has_vertex("C"));
  EXPECT_EQ(h.edge("y").u, "u1");
  EXPECT_EQ(h.edge("x").u, "u1");
  EXPECT_EQ(h.edge("5").v, "u2");
  EXPECT_EQ(h.edge("6").v, "u2");
  EXPECT_EQ(h.edge("a"), (Edge{"a", "u1", "u2"}));
  EXPECT_EQ(h.edge("gamma"), (Edge{"gamma", "u2", "BR"}));
  EXPECT_EQ(h.edges().size(), 10u);
  EXPECT_EQ(h.vertices().size(), 6u);
  EXPECT_TRUE(verify_equivalence(figure2::graph(), figure2::line_split()));
}

TEST(LineSplit, SpokeGraphDegrees) {
  const LabeledGraph g = spoke_graph();
  const LabeledGraph h = n_line_split(g, spoke_spec());
  EXPECT_EQ(g.degree("u"), 7u);
  EXPECT_EQ(h.degree("u1"), 5u);
  EXPECT_EQ(h.degree("u2"), 5u);
  EXPECT_EQ(h.degree("v"), g.degree("v") + 1);
  EXPECT_EQ(h.edges().size(), g.edges().size() + 2);
  EXPECT_EQ(h.vertices().size(), g.vertices().size() + 1);
  EXPECT_TRUE(verify_equivalence(g, spoke_spec()));
}

TEST(LineSplit, InvalidPartitions) {
  const LabeledGraph g = spoke_graph();
  auto spec = spoke_spec();
  spec.right_edges.pop_back();
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);
  spec = spoke_spec();
  spec.right_edges.push_back("s1");
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);
  spec = spoke_spec();
  spec.left_edges.push_back("r1");
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);
  spec = spoke_spec();
  spec.anchor_edge = "r1";
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);
  spec = spoke_spec();
  spec.split_vertex = "w";
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);
  spec = spoke_spec();
  spec.left_edges.push_back("e");
  EXPECT_THROW(n_line_split(g, spec), InvalidPartition);

  LabeledGraph looped = g;
  looped.add_edge("z", "u", "u");
  EXPECT_THROW(n_line_split(looped, spoke_spec()), InvalidPartition);
}

TEST(LineSplit, LabelCollisions) {
  const LabeledGraph g = spoke_graph();
  EXPECT_THROW(n_line_split(g, spoke_spec(), {"u1", "u2", "r1", "gamma"}), LabelCollision);
  EXPECT_THROW(n_line_split(g, spoke_spec(), {"u1", "u2", "a", "a"}), LabelCollision);
  EXPECT_THROW(n_line_split(g, spoke_spec(), {"v", "u2", "a", "gamma"}), LabelCollision);
  EXPECT_THROW(n_line_split(g, spoke_spec(), {"w", "w", "a", "gamma"}), LabelCollision);
  // Reusing the split vertex name is allowed.
  const LabeledGraph h = n_line_split(g, spoke_spec(), {"u", "u'", "p", "q"});
  EXPECT_EQ(h.edge("p"), (Edge{"p", "u", "u'"}));
  EXPECT_TRUE(verify_equivalence(g, spoke_spec(), {"u", "u'", "p", "q"}));
}

TEST(LineSplit, OriginalLabelsAndEndpointsAwayFromUAreKept) {
  const LabeledGraph g = spoke_graph();
  const LabeledGraph h = n_line_split(g, spoke_spec());
  for (const auto& e : g.edges()) {
    ASSERT_TRUE(h.has_edge(e.label));
    if (!e.touches("u")) {
      EXPECT_EQ(h.edge(e.label), e);
    }
  }
}

TEST(LineSplit, TreesGainExactlyOneCycle) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 7);
    const LabeledGraph g = testing::random_connected_multigraph(rng, n, n - 1, false);
    const std::string u = g.vertices()[testing::uniform(rng, 0, n - 1)];
    const auto spec = testing::random_split_spec(rng, g, u);
    ASSERT_TRUE(spec.has_value());
    const LabeledGraph h = n_line_split(g, *spec);
    ASSERT_EQ(components(h), 1u);
    // One extra vertex and two extra edges: exactly one new cycle a, gamma, e.
    ASSERT_EQ(cycle_matroid(h).circuits().size(), 1u);
    ASSERT_TRUE(verify_equivalence(g, *spec));
  }
}

TEST(LineSplit, MatchesMatroidSplittingOnRandomMultigraphs) {
  std::mt19937_64 rng(79);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = testing::uniform(rng, 2, 6);
    const std::size_t m = testing::uniform(rng, n - 1, 9);
    const LabeledGraph g = testing::random_connected_multigraph(rng, n, m);
    const std::string u = g.vertices()[testing::uniform(rng, 0, n - 1)];
    const auto spec = testing::random_split_spec(rng, g, u);
    if (!spec) continue;
    ASSERT_TRUE(verify_equivalence(g, *spec)) << format_graph(g) << "split at " << u;
    ++checked;
  }
}

}  // namespace
}  // namespace essplit::graph

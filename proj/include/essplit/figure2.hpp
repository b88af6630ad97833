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

// Worked example: the wheel-like graph on a square TL-TR-BR-BL with a centre
// vertex C, split at C with X = {x, y} and e = y. Published closures and
// flat lists for this instance are kept here as golden data.

#ifndef ESSPLIT_FIGURE2_HPP_
#define ESSPLIT_FIGURE2_HPP_

#include <string>
#include <vector>

#include "essplit/es_splitting.hpp"
#include "essplit/graph.hpp"
#include "essplit/matroid.hpp"

namespace essplit::figure2 {

inline constexpr const char* kGraphText =
    "# square TL-TR-BR-BL with centre C\n"
    "1 TL BL\n"
    "2 BL BR\n"
    "3 TR BR\n"
    "4 TL TR\n"
    "5 TL C\n"
    "6 BL C\n"
    "x C TR\n"
    "y C BR\n";

inline graph::LabeledGraph graph() { return graph::parse_graph(std::string(kGraphText)); }

inline BinaryMatroid matroid() { return graph::cycle_matroid(graph()); }

inline const std::vector<std::string>& x_labels() {
  static const std::vector<std::string> x = {"x", "y"};
  return x;
}

inline constexpr const char* kE = "y";

inline SplitContext context() { return SplitContext::from_labels(matroid(), x_labels(), kE); }

// The line split realising the same instance on the graph: C becomes u1
// (keeping y and x) and u2 (taking 5 and 6).
inline graph::LineSplitSpec line_split() { return {"C", "y", {"x"}, {"5", "6"}}; }

struct ClosureExample {
  std::vector<std::string> query;
  std::vector<std::string> published;
  const char* case_id;
  std::string note;
};

// The eleven worked closure queries with their published answers. e is
// written as y and the new elements as a and gamma.
inline const std::vector<ClosureExample>& closure_examples() {
  static const std::vector<ClosureExample> examples = {
      {{"4", "5"}, {"4", "5"}, "L3.2", ""},
      {{"1", "5"}, {"1", "5", "6"}, "L3.3", ""},
      {{"1", "4", "6", "x"}, {"1", "4", "6", "x", "a"}, "L3.4.1", ""},
      {{"1", "6", "a"}, {"1", "5", "6", "a"}, "L3.4.2", ""},
      {{"2", "6"}, {"2", "6", "gamma"}, "L3.5", ""},
      {{"4", "5", "gamma"}, {"3", "4", "5", "gamma"}, "L3.6", ""},
      // Published with A' = A although the case needs gamma in A' and the
      // answer holds gamma; read as A' = {1,6,gamma}.
      {{"1", "6", "gamma"}, {"1", "2", "5", "6", "gamma"}, "L3.7",
       "query read as {1,6,gamma}; published text has A' = A"},
      {{"a", "gamma"}, {"y", "a", "gamma"}, "L3.8.1", ""},
      {{"2", "6", "a"}, {"2", "6", "y", "a", "gamma"}, "L3.8.2", ""},
      {{"4", "5", "x", "gamma"}, {"4", "5", "x", "y", "a", "gamma"}, "L3.8.3", ""},
      {{"2", "6", "y"}, {"2", "6", "y", "a", "gamma"}, "L3.8.5", ""},
  };
  return examples;
}

// The extra worked query {e, gamma} -> {a, e, gamma}.
inline const ClosureExample& e_gamma_example() {
  static const ClosureExample example{{"y", "gamma"}, {"y", "a", "gamma"}, "L3.8.4", ""};
  return example;
}

// Published flats of M (32 entries, E written out).
inline const std::vector<std::vector<std::string>>& published_flats_of_m() {
  static const std::vector<std::vector<std::string>> flats = {
      {"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"6"}, {"x"}, {"y"},
      {"1", "4"}, {"1", "3"}, {"1", "x"}, {"1", "y"}, {"1", "2"}, {"2", "3"},
      {"2", "4"}, {"2", "5"}, {"2", "x"}, {"3", "4"}, {"3", "5"}, {"3", "6"},
      {"4", "6"}, {"4", "y"},
      {"1", "5", "6"}, {"x", "y", "3"}, {"2", "6", "y"}, {"1", "2", "3", "4"},
      {"4", "5", "x"},
      {"1", "2", "5", "6", "y"}, {"3", "4", "5", "x", "y"}, {"1", "4", "5", "6", "x"},
      {"2", "3", "6", "x", "y"},
      {"1", "2", "3", "4", "5", "6", "x", "y"},
  };
  return flats;
}

// Published flats of the split matroid (50 entries, E + {a, gamma} written
// out).
inline const std::vector<std::vector<std::string>>& published_flats_of_split() {
  static const std::vector<std::vector<std::string>> flats = {
      {"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"6"}, {"x"}, {"y"}, {"a"}, {"gamma"},
      {"1", "4"}, {"1", "3"}, {"1", "x"}, {"1", "y"}, {"1", "2"}, {"2", "3"},
      {"2", "4"}, {"2", "5"}, {"2", "x"}, {"3", "4"}, {"3", "5"}, {"3", "6"},
      {"4", "6"}, {"4", "y"},
      {"1", "a"}, {"2", "a"}, {"3", "a"}, {"4", "a"}, {"5", "a"}, {"6", "a"}, {"x", "a"},
      {"1", "gamma"}, {"3", "gamma"}, {"4", "gamma"}, {"5", "gamma"}, {"x", "gamma"},
      {"1", "5", "6"}, {"x", "y", "3"}, {"a", "y", "gamma"}, {"2", "6", "gamma"},
      {"1", "2", "3", "4"}, {"4", "5", "a", "x"}, {"1", "2", "5", "6", "gamma"},
      {"3", "a", "x", "y", "gamma"}, {"2", "6", "a", "y", "gamma"},
      {"3", "4", "5", "a", "x", "y"}, {"1", "4", "5", "6", "a", "x"},
      {"1", "2", "5", "6", "a", "y", "gamma"}, {"2", "3", "6", "a", "x", "y", "gamma"},
      {"1", "2", "3", "4", "5", "6", "x", "y", "a", "gamma"},
  };
  return flats;
}

}  // namespace essplit::figure2

#endif  // ESSPLIT_FIGURE2_HPP_

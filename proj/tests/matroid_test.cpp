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

#include "essplit/matroid.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "essplit/figure2.hpp"
#include "random_instances.hpp"

namespace essplit {
namespace {

bool contains(const std::vector<LabelSet>& sets, LabelSet s) {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

// Minimal dependent sets found by testing every proper subset of every
// subset; shares only rank_of with the implementation.
std::vector<LabelSet> brute_force_circuits(const BinaryMatroid& m) {
  std::vector<LabelSet> out;
  const LabelSet::Mask end = LabelSet::Mask{1} << m.size();
  for (LabelSet::Mask s = 1; s < end; ++s) {
    if (m.is_independent(LabelSet(s))) continue;
    bool minimal = true;
    for (LabelSet::Mask sub = (s - 1) & s; sub != 0 && minimal; sub = (sub - 1) & s) {
      if (!m.is_independent(LabelSet(sub))) minimal = false;
    }
    if (minimal) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

class Figure2Matroid : public ::testing::Test {
 protected:
  BinaryMatroid m = figure2::matroid();
  LabelSet set(std::initializer_list<std::string_view> names) const {
    return m.ground().parse(names);
  }
};

TEST_F(Figure2Matroid, Rank) {
  EXPECT_EQ(m.rank_of(LabelSet{}), 0u);
  EXPECT_EQ(m.rank_of(set({"4", "5", "x"})), 2u);
  EXPECT_EQ(m.rank_of(m.ground_set()), 4u);
}

TEST_F(Figure2Matroid, Closure) {
  EXPECT_EQ(m.closure_of(set({"4", "5"})), set({"4", "5", "x"}));
  EXPECT_EQ(m.closure_of(set({"1", "5"})), set({"1", "5", "6"}));
  EXPECT_EQ(m.closure_of(set({"2", "6"})), set({"2", "6", "y"}));
  EXPECT_EQ(m.closure_of(m.ground_set()), m.ground_set());
}

TEST_F(Figure2Matroid, Circuits) {
  const auto& circuits = m.circuits();
  for (auto c : {set({"1", "5", "6"}), set({"4", "5", "x"}), set({"2", "6", "y"}),
                 set({"3", "x", "y"}), set({"1", "2", "3", "4"})}) {
    EXPECT_TRUE(contains(circuits, c)) << m.ground().format(c);
  }
  EXPECT_EQ(circuits, brute_force_circuits(m));
}

TEST_F(Figure2Matroid, Flats) {
  EXPECT_TRUE(m.is_flat(set({"1", "5", "6"})));
  EXPECT_FALSE(m.is_flat(set({"4", "5"})));
  EXPECT_TRUE(m.is_flat(m.ground_set()));
  const auto flats = m.flats();
  EXPECT_TRUE(contains(flats, LabelSet{}));
  EXPECT_TRUE(std::is_sorted(flats.begin(), flats.end(), canonical_less));
  for (LabelSet f : flats) EXPECT_TRUE(m.is_flat(f));
}

TEST_F(Figure2Matroid, UnknownLabel) {
  EXPECT_THROW(set({"9"}), UnknownLabel);
  EXPECT_THROW(m.rank_of(LabelSet::single(20)), UnknownLabel);
}

TEST(Circuits, FreeMatroidHasNone) {
  BinaryMatroid m(gf2::GF2Matrix({"p", "q", "r"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(m.circuits().empty());
}

TEST(Circuits, LoopIsACircuit) {
  BinaryMatroid m(gf2::GF2Matrix({"p", "z"}, {{1, 0}}));
  EXPECT_TRUE(contains(m.circuits(), m.ground().parse({"z"})));
}

TEST(Circuits, CanonicalOrder) {
  // Parallel pair {p,q} and triangle {p,r,s}, {q,r,s}.
  BinaryMatroid m(gf2::GF2Matrix({"p", "q", "r", "s"}, {{1, 1, 1, 0}, {0, 0, 1, 1}}));
  const auto& c = m.circuits();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], m.ground().parse({"p", "q"}));
  EXPECT_EQ(c[1], m.ground().parse({"p", "r", "s"}));
  EXPECT_EQ(c[2], m.ground().parse({"q", "r", "s"}));
}

TEST(Circuits, MatchBruteForceOnRandomMatroids) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatroid m =
        testing::random_matroid(rng, testing::uniform(rng, 1, 9), testing::uniform(rng, 1, 5));
    ASSERT_EQ(m.circuits(), brute_force_circuits(m)) << gf2::format_matrix(m.matrix());
  }
}

TEST(Circuits, CapIsEnforced) {
  std::mt19937_64 rng(1);
  BinaryMatroid m(testing::random_matrix(rng, 3, 6), EnumerationCaps{5, 5});
  EXPECT_THROW(m.circuits(), GroundSetTooLarge);
  EXPECT_THROW(m.flats(), GroundSetTooLarge);
}

TEST(Circuits, CacheIsSharedAndThreadSafe) {
  std::mt19937_64 rng(23);
  const BinaryMatroid m = testing::random_matroid(rng, 14, 6);
  std::vector<const std::vector<LabelSet>*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    threads.emplace_back([&, i] { seen[i] = &m.circuits(); });
  }
  for (auto& t : threads) t.join();
  for (const auto* s : seen) EXPECT_EQ(s, seen[0]);
  const BinaryMatroid copy = m;
  EXPECT_EQ(&copy.circuits(), seen[0]);
}

TEST(Flats, FreeMatroidOnTwoElements) {
  BinaryMatroid m(gf2::GF2Matrix({"p", "q"}, {{1, 0}, {0, 1}}));
  const auto flats = m.flats();
  const Ground& g = m.ground();
  EXPECT_EQ(flats, (std::vector<LabelSet>{LabelSet{}, g.parse({"p"}), g.parse({"q"}),
                                          g.parse({"p", "q"})}));
}

TEST(Flats, LoopsMakeEmptySetNonFlat) {
  BinaryMatroid m(gf2::GF2Matrix({"p", "z"}, {{1, 0}}));
  EXPECT_FALSE(m.is_flat(LabelSet{}));
  EXPECT_EQ(m.closure_of(LabelSet{}), m.ground().parse({"z"}));
}

TEST(ClassifyCircuit, Parity) {
  const BinaryMatroid m = figure2::matroid();
  const Ground& g = m.ground();
  const LabelSet x = g.parse({"x", "y"});
  EXPECT_EQ(classify_circuit(g.parse({"2", "6", "y"}), x), CircuitClass::kOX);
  EXPECT_EQ(classify_circuit(g.parse({"1", "2", "3", "4"}), x), CircuitClass::kEX);
  EXPECT_EQ(classify_circuit(g.parse({"3", "x", "y"}), x), CircuitClass::kEX);
}

// Properties of closure and circuits checked on random matroids with at most
// ten elements, all subsets.
class RandomMatroidProperties : public ::testing::TestWithParam<int> {};

TEST_P(RandomMatroidProperties, ClosureAndCircuitAxioms) {
  std::mt19937_64 rng(1000 + GetParam());
  const BinaryMatroid m =
      testing::random_matroid(rng, testing::uniform(rng, 1, 10), testing::uniform(rng, 1, 5));
  const auto& circuits = m.circuits();
  const LabelSet::Mask end = LabelSet::Mask{1} << m.size();
  for (LabelSet::Mask bits = 0; bits < end; ++bits) {
    const LabelSet a(bits);
    const LabelSet cl = m.closure_of(a);
    ASSERT_TRUE(a.subset_of(cl));
    ASSERT_EQ(m.closure_of(cl), cl);

    // Closure through circuits.
    LabelSet via_circuits = a;
    for (LabelSet c : circuits) {
      for (std::size_t x : c) {
        if (c.subset_of(a.with(x))) via_circuits = via_circuits.with(x);
      }
    }
    ASSERT_EQ(cl, via_circuits);

    // Adding an element of the closure leaves the closure unchanged.
    for (std::size_t x : cl) ASSERT_EQ(m.closure_of(a.with(x)), cl);
  }

  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      const LabelSet c1 = circuits[i];
      const LabelSet c2 = circuits[j];
      ASSERT_FALSE(c1.subset_of(c2));
      ASSERT_FALSE(m.is_independent(c1 ^ c2));
      for (std::size_t z : c1 & c2) {
        const LabelSet rest = (c1 | c2).without(z);
        ASSERT_TRUE(std::any_of(circuits.begin(), circuits.end(),
                                [&](LabelSet c) { return c.subset_of(rest); }));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatroidProperties, ::testing::Range(0, 40));

}  // namespace
}  // namespace essplit

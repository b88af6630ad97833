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

// Definition-level matroid computations on the vector matroid of a GF(2)
// matrix. Everything here is derived from column ranks and exhaustive
// enumeration only; it is the reference the closed-form predictors in
// es_splitting.hpp are checked against.

#ifndef ESSPLIT_MATROID_HPP_
#define ESSPLIT_MATROID_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "essplit/errors.hpp"
#include "essplit/gf2.hpp"
#include "essplit/label_set.hpp"

namespace essplit {

struct EnumerationCaps {
  // Largest ground set whose circuits may be enumerated.
  std::size_t circuits = 24;
  // Largest ground set for operations visiting every subset (flats, sweeps).
  std::size_t subsets = 20;
};

inline void sort_canonical(std::vector<LabelSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

class BinaryMatroid {
 public:
  BinaryMatroid() : BinaryMatroid(gf2::GF2Matrix{}) {}
  explicit BinaryMatroid(gf2::GF2Matrix matrix, EnumerationCaps caps = {})
      : matrix_(std::move(matrix)), caps_(caps), cache_(std::make_shared<CircuitCache>()) {}

  const gf2::GF2Matrix& matrix() const { return matrix_; }
  const Ground& ground() const { return matrix_.columns(); }
  LabelSet ground_set() const { return ground().all(); }
  std::size_t size() const { return ground().size(); }
  const EnumerationCaps& caps() const { return caps_; }

  std::size_t rank_of(LabelSet a) const { return gf2::rank_of_columns(matrix_, a); }
  std::size_t rank() const { return gf2::rank(matrix_); }

  bool is_independent(LabelSet a) const { return rank_of(a) == a.size(); }

  // {x in E | r(A + x) = r(A)}.
  LabelSet closure_of(LabelSet a) const {
    const std::size_t r = rank_of(a);
    LabelSet out = a;
    for (std::size_t x : ground_set() - a) {
      if (rank_of(a.with(x)) == r) out = out.with(x);
    }
    return out;
  }

  bool is_flat(LabelSet a) const { return closure_of(a) == a; }

  // Dependent, and every one-element deletion independent.
  bool is_circuit(LabelSet c) const {
    ground().check(c);
    if (c.empty() || is_independent(c)) return false;
    for (std::size_t x : c) {
      if (!is_independent(c.without(x))) return false;
    }
    return true;
  }

  // All circuits in canonical order. Computed once; later calls (from any
  // thread) return the cached list.
  const std::vector<LabelSet>& circuits() const {
    if (size() > caps_.circuits) throw GroundSetTooLarge(size(), caps_.circuits);
    std::call_once(cache_->once, [this] { cache_->circuits = enumerate_circuits(); });
    return cache_->circuits;
  }

  std::vector<LabelSet> flats() const {
    if (size() > caps_.subsets) throw GroundSetTooLarge(size(), caps_.subsets);
    std::vector<LabelSet> out;
    const LabelSet::Mask end = LabelSet::Mask{1} << size();
    for (LabelSet::Mask bits = 0; bits < end; ++bits) {
      if (is_flat(LabelSet(bits))) out.emplace_back(bits);
    }
    sort_canonical(out);
    return out;
  }

 private:
  struct CircuitCache {
    std::once_flag once;
    std::vector<LabelSet> circuits;
  };

  // Subsets are visited by increasing size; a candidate containing a circuit
  // already found is skipped, otherwise it is kept when it passes
  // is_circuit. Circuits have at most rank + 1 elements.
  std::vector<LabelSet> enumerate_circuits() const {
    std::vector<LabelSet> found;
    const std::size_t n = size();
    const std::size_t max_size = std::min(n, rank() + 1);
    for (std::size_t k = 1; k <= max_size; ++k) {
      // Gosper's hack over all k-subsets of n positions.
      LabelSet::Mask bits = (LabelSet::Mask{1} << k) - 1;
      const LabelSet::Mask limit = n == 64 ? 0 : (LabelSet::Mask{1} << n);
      while (true) {
        const LabelSet candidate(bits);
        const bool has_known = std::any_of(found.begin(), found.end(), [&](LabelSet c) {
          return c.subset_of(candidate);
        });
        if (!has_known && is_circuit(candidate)) found.push_back(candidate);
        const LabelSet::Mask low = bits & (~bits + 1);
        const LabelSet::Mask ripple = bits + low;
        if (ripple == 0) break;
        bits = (((ripple ^ bits) >> 2) / low) | ripple;
        if (limit != 0 && bits >= limit) break;
      }
    }
    sort_canonical(found);
    return found;
  }

  gf2::GF2Matrix matrix_;
  EnumerationCaps caps_;
  std::shared_ptr<CircuitCache> cache_;
};

enum class CircuitClass { kOX, kEX };

// OX when the circuit meets X in an odd number of elements.
constexpr CircuitClass classify_circuit(LabelSet c, LabelSet x_set) {
  return (c & x_set).size() % 2 == 1 ? CircuitClass::kOX : CircuitClass::kEX;
}

constexpr const char* to_string(CircuitClass cls) {
  return cls == CircuitClass::kOX ? "OX" : "EX";
}

}  // namespace essplit

#endif  // ESSPLIT_MATROID_HPP_

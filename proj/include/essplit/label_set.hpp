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

#ifndef ESSPLIT_LABEL_SET_HPP_
#define ESSPLIT_LABEL_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "essplit/errors.hpp"

namespace essplit {

inline constexpr std::size_t kMaxGroundSize = 64;

// A subset of a ground set, stored as a bit mask over ground-set positions.
// Bit i stands for the i-th label of the owning Ground; iteration visits
// positions in increasing order, which is the ground-set order.
class LabelSet {
 public:
  using Mask = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr LabelSet() = default;
  constexpr explicit LabelSet(Mask bits) : bits_(bits) {}

  static constexpr LabelSet single(std::size_t index) {
    return LabelSet(Mask{1} << index);
  }
  // The first n positions.
  static constexpr LabelSet first(std::size_t n) {
    return LabelSet(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const {
    return index < 64 && ((bits_ >> index) & 1u) != 0;
  }
  constexpr bool subset_of(LabelSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool proper_subset_of(LabelSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(LabelSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr LabelSet with(std::size_t index) const {
    return LabelSet(bits_ | (Mask{1} << index));
  }
  constexpr LabelSet without(std::size_t index) const {
    return LabelSet(bits_ & ~(Mask{1} << index));
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  friend constexpr LabelSet operator|(LabelSet l, LabelSet r) {
    return LabelSet(l.bits_ | r.bits_);
  }
  friend constexpr LabelSet operator&(LabelSet l, LabelSet r) {
    return LabelSet(l.bits_ & r.bits_);
  }
  // Symmetric difference.
  friend constexpr LabelSet operator^(LabelSet l, LabelSet r) {
    return LabelSet(l.bits_ ^ r.bits_);
  }
  // Set difference.
  friend constexpr LabelSet operator-(LabelSet l, LabelSet r) {
    return LabelSet(l.bits_ & ~r.bits_);
  }
  friend constexpr bool operator==(LabelSet, LabelSet) = default;

 private:
  Mask bits_ = 0;
};

// Canonical order: by size, then lexicographically on the sorted position
// sequence. For equal sizes the set holding the smallest element of the
// symmetric difference comes first.
constexpr bool canonical_less(LabelSet l, LabelSet r) {
  if (l.size() != r.size()) return l.size() < r.size();
  const LabelSet::Mask diff = l.bits() ^ r.bits();
  if (diff == 0) return false;
  return (l.bits() & (diff & (~diff + 1))) != 0;
}

// Ordered, duplicate-free list of element labels. Position in the list is
// the ground-set order used for every emitted set.
class Ground {
 public:
  Ground() = default;
  explicit Ground(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxGroundSize) {
      throw GroundSetTooLarge(labels_.size(), kMaxGroundSize);
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw PreconditionViolated("empty element label");
      if (!index_.emplace(labels_[i], i).second) throw LabelCollision(labels_[i]);
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  LabelSet all() const { return LabelSet::first(labels_.size()); }

  bool contains(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
  }
  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string_view label) const {
    auto found = find(label);
    if (!found) throw UnknownLabel(std::string(label));
    return *found;
  }

  LabelSet parse(std::span<const std::string> names) const {
    LabelSet out;
    for (const auto& name : names) out = out.with(index_of(name));
    return out;
  }
  LabelSet parse(std::initializer_list<std::string_view> names) const {
    LabelSet out;
    for (auto name : names) out = out.with(index_of(name));
    return out;
  }

  // Throws UnknownLabel when the set mentions a position past the ground set.
  void check(LabelSet set) const {
    if (!set.subset_of(all())) {
      throw UnknownLabel("#" + std::to_string(*(set - all()).begin()));
    }
  }

  std::vector<std::string> names(LabelSet set) const {
    check(set);
    std::vector<std::string> out;
    out.reserve(set.size());
    for (std::size_t i : set) out.push_back(labels_[i]);
    return out;
  }

  // "{1,5,6}"
  std::string format(LabelSet set) const {
    std::string out = "{";
    bool first = true;
    for (const auto& name : names(set)) {
      if (!first) out += ',';
      out += name;
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Ground& l, const Ground& r) {
    return l.labels_ == r.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Splits "2,6,gamma" into labels; empty items are dropped.
inline std::vector<std::string> split_label_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace essplit

#endif  // ESSPLIT_LABEL_SET_HPP_

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

// Exact linear algebra over GF(2) for matrices of at most 64 columns. Each
// row is packed into a single 64-bit word indexed by column position.

#ifndef ESSPLIT_GF2_HPP_
#define ESSPLIT_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "essplit/errors.hpp"
#include "essplit/label_set.hpp"

namespace essplit::gf2 {

using Word = std::uint64_t;

// Fixed-length bit vector. Length is set at construction and never changes.
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  std::size_t size() const { return length_; }

  bool get(std::size_t i) const { return ((words_.at(i / 64) >> (i % 64)) & 1u) != 0; }
  void set(std::size_t i, bool value = true) {
    Word& w = words_.at(i / 64);
    const Word bit = Word{1} << (i % 64);
    w = value ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t i) { words_.at(i / 64) ^= Word{1} << (i % 64); }

  bool is_zero() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  GF2Vector& operator+=(const GF2Vector& other) {
    if (other.length_ != length_) throw PreconditionViolated("GF2Vector length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend GF2Vector operator+(GF2Vector l, const GF2Vector& r) { return l += r; }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < length_; ++i) {
      if (i) out += ' ';
      out += get(i) ? '1' : '0';
    }
    return out;
  }

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

// Row reduction rank of a list of packed rows. Plain Gaussian elimination,
// pivoting on the lowest column that still has a nonzero entry.
inline std::size_t row_rank(std::vector<Word> rows) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 64 && rank < rows.size(); ++col) {
    const Word bit = Word{1} << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && (rows[pivot] & bit) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit) != 0) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

// Matrix over GF(2) with one distinct label per column.
class GF2Matrix {
 public:
  GF2Matrix() = default;

  // Rows are packed masks; bits at or past the column count must be clear.
  GF2Matrix(Ground columns, std::vector<Word> rows)
      : columns_(std::move(columns)), rows_(std::move(rows)) {
    const Word allowed = columns_.all().bits();
    for (Word row : rows_) {
      if ((row & ~allowed) != 0) {
        throw PreconditionViolated("row has entries beyond the last column");
      }
    }
  }

  GF2Matrix(std::vector<std::string> labels, const std::vector<std::vector<int>>& entries)
      : columns_(std::move(labels)) {
    rows_.reserve(entries.size());
    for (const auto& row : entries) {
      if (row.size() != columns_.size()) {
        throw PreconditionViolated("row length " + std::to_string(row.size()) +
                                   " does not match column count " +
                                   std::to_string(columns_.size()));
      }
      Word packed = 0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0 && row[c] != 1) throw PreconditionViolated("entries must be 0 or 1");
        if (row[c] == 1) packed |= Word{1} << c;
      }
      rows_.push_back(packed);
    }
  }

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return columns_.size(); }
  const Ground& columns() const { return columns_; }
  const std::vector<std::string>& col_labels() const { return columns_.labels(); }
  const std::vector<Word>& rows() const { return rows_; }

  bool at(std::size_t row, std::size_t col) const {
    return ((rows_.at(row) >> col) & 1u) != 0;
  }

  GF2Vector row(std::size_t r) const {
    GF2Vector out(n_cols());
    for (std::size_t c = 0; c < n_cols(); ++c) out.set(c, at(r, c));
    return out;
  }

  GF2Vector column(std::size_t c) const {
    columns_.check(LabelSet::single(c));
    GF2Vector out(n_rows());
    for (std::size_t r = 0; r < n_rows(); ++r) out.set(r, at(r, c));
    return out;
  }

  // Rows restricted to the selected columns.
  std::vector<Word> restricted_rows(LabelSet cols) const {
    columns_.check(cols);
    std::vector<Word> out;
    out.reserve(rows_.size());
    for (Word row : rows_) out.push_back(row & cols.bits());
    return out;
  }

  friend bool operator==(const GF2Matrix& l, const GF2Matrix& r) {
    return l.columns_ == r.columns_ && l.rows_ == r.rows_;
  }

 private:
  Ground columns_;
  std::vector<Word> rows_;
};

inline std::size_t rank(const GF2Matrix& m) { return row_rank(m.rows()); }

// Rank of the column submatrix selected by cols.
inline std::size_t rank_of_columns(const GF2Matrix& m, LabelSet cols) {
  return row_rank(m.restricted_rows(cols));
}

inline bool columns_dependent(const GF2Matrix& m, LabelSet cols) {
  return rank_of_columns(m, cols) < cols.size();
}

inline GF2Vector column_sum(const GF2Matrix& m, LabelSet cols) {
  m.columns().check(cols);
  if (cols.empty()) throw PreconditionViolated("column_sum needs a nonempty column set");
  GF2Vector out(m.n_rows());
  for (std::size_t c : cols) out += m.column(c);
  return out;
}

// Transpose; column labels of the result are "r0", "r1", ...
inline GF2Matrix transpose(const GF2Matrix& m) {
  if (m.n_rows() > kMaxGroundSize) throw GroundSetTooLarge(m.n_rows(), kMaxGroundSize);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < m.n_rows(); ++r) labels.push_back("r" + std::to_string(r));
  std::vector<Word> rows(m.n_cols(), 0);
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      if (m.at(r, c)) rows[c] |= Word{1} << r;
    }
  }
  return GF2Matrix(Ground(std::move(labels)), std::move(rows));
}

// Appends one row given as a column mask.
inline GF2Matrix with_row(const GF2Matrix& m, Word row) {
  auto rows = m.rows();
  rows.push_back(row);
  return GF2Matrix(m.columns(), std::move(rows));
}

// Appends one labelled column.
inline GF2Matrix with_column(const GF2Matrix& m, const std::string& label,
                             const GF2Vector& column) {
  if (column.size() != m.n_rows()) throw PreconditionViolated("column length mismatch");
  if (m.columns().contains(label)) throw LabelCollision(label);
  auto labels = m.col_labels();
  labels.push_back(label);
  auto rows = m.rows();
  const std::size_t c = m.n_cols();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (column.get(r)) rows[r] |= Word{1} << c;
  }
  return GF2Matrix(Ground(std::move(labels)), std::move(rows));
}

// Text format: first line holds whitespace-separated column labels, every
// following nonblank line one row of 0/1 entries.
inline GF2Matrix parse_matrix(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": " + what);
  };
  std::vector<std::string> labels;
  while (labels.empty() && std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    for (std::string w; words >> w;) labels.push_back(w);
  }
  if (labels.empty()) fail("missing column label line");
  Ground ground;
  try {
    ground = Ground(labels);
  } catch (const Error& err) {
    fail(err.what());
  }
  std::vector<Word> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::vector<std::string> entries;
    for (std::string w; words >> w;) entries.push_back(w);
    if (entries.empty()) continue;
    if (entries.size() != labels.size()) {
      fail("expected " + std::to_string(labels.size()) + " entries, found " +
           std::to_string(entries.size()));
    }
    Word packed = 0;
    for (std::size_t c = 0; c < entries.size(); ++c) {
      if (entries[c] == "1") {
        packed |= Word{1} << c;
      } else if (entries[c] != "0") {
        fail("entry '" + entries[c] + "' is not 0 or 1");
      }
    }
    rows.push_back(packed);
  }
  return GF2Matrix(std::move(ground), std::move(rows));
}

inline GF2Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

inline void write_matrix(std::ostream& out, const GF2Matrix& m) {
  for (std::size_t c = 0; c < m.n_cols(); ++c) {
    if (c) out << ' ';
    out << m.col_labels()[c];
  }
  out << '\n';
  for (std::size_t r = 0; r < m.n_rows(); ++r) out << m.row(r).to_string() << '\n';
}

inline std::string format_matrix(const GF2Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace essplit::gf2

#endif  // ESSPLIT_GF2_HPP_

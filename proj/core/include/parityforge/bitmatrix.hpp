// Copyright 2026 The ParityForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parityforge {

class Gf2Error : public std::runtime_error {
 public:
  explicit Gf2Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Fixed-length vector over GF(2), packed into 64-bit blocks.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

  static BitVector from_indices(std::size_t size, std::initializer_list<std::size_t> ones);
  static BitVector from_indices(std::size_t size, std::span<const std::size_t> ones);

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      blocks_[i >> 6] |= mask;
    else
      blocks_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  bool operator==(const BitVector& other) const = default;

  /// Lexicographic order with lower column indices most significant.
  bool lex_less(const BitVector& other) const;

  bool any() const;
  std::size_t popcount() const;

  /// Index of the lowest set bit, or npos when the vector is zero.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t lowest_set() const;

  std::vector<std::size_t> set_indices() const;

  /// Keeps only the bits at `positions`, in that order, as a new vector.
  BitVector gather(std::span<const std::size_t> positions) const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Dense bit matrix over GF(2). Columns carry integer labels naming qubits
/// (or interaction terms); labels must be unique within one matrix.
///
/// Rows produced by rref() remember their pivot column, which downstream
/// code (boundary maps, vector reduction) relies on.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::vector<int> column_labels);
  static BitMatrix with_default_labels(std::size_t num_cols);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return labels_.size(); }

  const std::vector<int>& column_labels() const { return labels_; }
  std::size_t index_of_label(int label) const;
  bool has_label(int label) const;

  void add_row(BitVector row, std::size_t pivot_col = BitVector::npos);
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVector>& rows() const { return rows_; }

  /// Pivot column index of row i, or BitVector::npos when not in reduced form.
  std::size_t pivot_col(std::size_t i) const { return pivot_cols_[i]; }
  bool is_reduced() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::vector<int> labels_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivot_cols_;
};

/// Row-reduced echelon form with pivots chosen in the given column order
/// (all columns, natural order, when empty). Zero rows are dropped and the
/// rowspace is preserved. Ties between eligible pivot rows go to the lowest
/// row index so results are deterministic.
BitMatrix rref(const BitMatrix& m, std::span<const std::size_t> column_order = {});

std::size_t rank(const BitMatrix& m);

/// True iff v is a GF(2) combination of the rows of m.
bool in_rowspace(const BitMatrix& m, const BitVector& v);

/// XORs rows of the reduced matrix into v until every pivot column of m is
/// zero in the result. Requires m to be in reduced form.
BitVector reduce_vector(const BitMatrix& m, const BitVector& v);

/// True iff the rowspaces contain each other. Column labels must agree.
bool rowspace_equal(const BitMatrix& a, const BitMatrix& b);

/// The subspace of R(m) of vectors that vanish on `cols`, projected onto the
/// remaining columns: rref with `cols` ordered first, rows with a pivot in
/// `cols` dropped, surviving rows restricted to the other columns.
BitMatrix eliminate_columns(const BitMatrix& m, std::span<const int> cols);

}  // namespace parityforge

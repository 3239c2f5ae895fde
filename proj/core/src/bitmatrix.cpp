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

#include "parityforge/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace parityforge {

BitVector BitVector::from_indices(std::size_t size, std::initializer_list<std::size_t> ones) {
  return from_indices(size, std::span<const std::size_t>(ones.begin(), ones.size()));
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> ones) {
  BitVector v(size);
  for (std::size_t i : ones) {
    if (i >= size) throw Gf2Error("bit index out of range");
    v.set(i);
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (size_ != other.size_) throw Gf2Error("length mismatch in BitVector xor");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] ^= other.blocks_[b];
  return *this;
}

bool BitVector::lex_less(const BitVector& other) const {
  if (size_ != other.size_) throw Gf2Error("length mismatch in BitVector compare");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b] == other.blocks_[b]) continue;
    // Differing block: the vector with a 0 at the lowest differing bit is
    // lexicographically smaller (column 0 is most significant).
    const std::uint64_t diff = blocks_[b] ^ other.blocks_[b];
    const std::uint64_t low = diff & (~diff + 1);
    return (blocks_[b] & low) == 0;
  }
  return false;
}

bool BitVector::any() const {
  for (std::uint64_t b : blocks_)
    if (b) return true;
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::size_t BitVector::lowest_set() const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b]) return b * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[b]));
  }
  return npos;
}

std::vector<std::size_t> BitVector::set_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::uint64_t word = blocks_[b];
    while (word) {
      out.push_back(b * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector BitVector::gather(std::span<const std::size_t> positions) const {
  BitVector out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (get(positions[i])) out.set(i);
  }
  return out;
}

BitMatrix::BitMatrix(std::vector<int> column_labels) : labels_(std::move(column_labels)) {
  std::unordered_set<int> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Gf2Error("duplicate column label");
}

BitMatrix BitMatrix::with_default_labels(std::size_t num_cols) {
  std::vector<int> labels(num_cols);
  std::iota(labels.begin(), labels.end(), 0);
  return BitMatrix(std::move(labels));
}

std::size_t BitMatrix::index_of_label(int label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw Gf2Error("unknown column label " + std::to_string(label));
}

bool BitMatrix::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

void BitMatrix::add_row(BitVector row, std::size_t pivot_col) {
  if (row.size() != labels_.size()) throw Gf2Error("row length does not match column count");
  rows_.push_back(std::move(row));
  pivot_cols_.push_back(pivot_col);
}

bool BitMatrix::is_reduced() const {
  for (std::size_t p : pivot_cols_)
    if (p == BitVector::npos) return false;
  return true;
}

BitMatrix rref(const BitMatrix& m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(m.num_cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  std::vector<BitVector> work(m.rows());
  std::vector<bool> used(work.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

  for (std::size_t col : order) {
    std::size_t pivot = BitVector::npos;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (!used[r] && work[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == BitVector::npos) continue;
    used[pivot] = true;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != pivot && work[r].get(col)) work[r] ^= work[pivot];
    }
    pivots.emplace_back(pivot, col);
  }

  BitMatrix out(m.column_labels());
  for (const auto& [row, col] : pivots) out.add_row(work[row], col);
  return out;
}

std::size_t rank(const BitMatrix& m) { return rref(m).num_rows(); }

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.num_cols()) throw Gf2Error("vector length does not match column count");
  const BitMatrix red = m.is_reduced() ? m : rref(m);
  return !reduce_vector(red, v).any();
}

BitVector reduce_vector(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.num_cols()) throw Gf2Error("vector length does not match column count");
  if (!m.is_reduced()) throw Gf2Error("reduce_vector requires a reduced matrix");
  BitVector out = v;
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    if (out.get(m.pivot_col(r))) out ^= m.row(r);
  }
  return out;
}

bool rowspace_equal(const BitMatrix& a, const BitMatrix& b) {
  if (a.column_labels() != b.column_labels()) throw Gf2Error("column label mismatch");
  const BitMatrix ra = rref(a);
  const BitMatrix rb = rref(b);
  if (ra.num_rows() != rb.num_rows()) return false;
  for (std::size_t r = 0; r < rb.num_rows(); ++r)
    if (!in_rowspace(ra, rb.row(r))) return false;
  for (std::size_t r = 0; r < ra.num_rows(); ++r)
    if (!in_rowspace(rb, ra.row(r))) return false;
  return true;
}

BitMatrix eliminate_columns(const BitMatrix& m, std::span<const int> cols) {
  std::unordered_set<std::size_t> drop;
  for (int label : cols) drop.insert(m.index_of_label(label));

  std::vector<std::size_t> order;
  order.reserve(m.num_cols());
  for (std::size_t i = 0; i < m.num_cols(); ++i)
    if (drop.count(i)) order.push_back(i);
  for (std::size_t i = 0; i < m.num_cols(); ++i)
    if (!drop.count(i)) order.push_back(i);

  const BitMatrix red = rref(m, order);

  std::vector<std::size_t> keep;
  std::vector<int> keep_labels;
  for (std::size_t i = 0; i < m.num_cols(); ++i) {
    if (!drop.count(i)) {
      keep.push_back(i);
      keep_labels.push_back(m.column_labels()[i]);
    }
  }
  // Position of each kept column inside the projected matrix.
  std::unordered_map<std::size_t, std::size_t> kept_pos;
  for (std::size_t i = 0; i < keep.size(); ++i) kept_pos[keep[i]] = i;

  BitMatrix out(std::move(keep_labels));
  for (std::size_t r = 0; r < red.num_rows(); ++r) {
    if (drop.count(red.pivot_col(r))) continue;
    out.add_row(red.row(r).gather(keep), kept_pos.at(red.pivot_col(r)));
  }
  return out;
}

}  // namespace parityforge

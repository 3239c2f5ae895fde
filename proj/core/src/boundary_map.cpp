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

#include "parityforge/boundary_map.hpp"

#include <unordered_set>

namespace parityforge {

BoundaryMap BoundaryMap::recompute(const BitMatrix& p,
                                   std::span<const int> interior_in_pivot_order) {
  std::vector<std::size_t> order;
  std::unordered_set<std::size_t> interior_idx;
  order.reserve(p.num_cols());
  for (int label : interior_in_pivot_order) {
    const std::size_t idx = p.index_of_label(label);
    order.push_back(idx);
    interior_idx.insert(idx);
  }
  for (std::size_t i = 0; i < p.num_cols(); ++i) {
    if (!interior_idx.count(i)) order.push_back(i);
  }

  const BitMatrix red = rref(p, order);

  std::unordered_set<std::size_t> pivoted;
  BoundaryMap b;
  b.rows_ = BitMatrix(p.column_labels());
  for (std::size_t r = 0; r < red.num_rows(); ++r) {
    const std::size_t pc = red.pivot_col(r);
    if (!interior_idx.count(pc)) continue;
    pivoted.insert(pc);
    b.row_of_label_[p.column_labels()[pc]] = b.rows_.num_rows();
    b.rows_.add_row(red.row(r), pc);
  }
  for (int label : interior_in_pivot_order) {
    if (!pivoted.count(p.index_of_label(label)))
      throw Gf2Error("unreachable interior qubit " + std::to_string(label));
  }
  return b;
}

const BitVector& BoundaryMap::row_for(int label) const {
  auto it = row_of_label_.find(label);
  if (it == row_of_label_.end()) throw Gf2Error("no boundary-map row for " + std::to_string(label));
  return rows_.row(it->second);
}

BitVector BoundaryMap::to_boundary_form(const BitVector& c) const {
  if (c.size() != rows_.num_cols() && rows_.num_rows() > 0)
    throw Gf2Error("vector length does not match boundary map columns");
  BitVector out = c;
  for (std::size_t r = 0; r < rows_.num_rows(); ++r) {
    if (out.get(rows_.pivot_col(r))) out ^= rows_.row(r);
  }
  return out;
}

}  // namespace parityforge

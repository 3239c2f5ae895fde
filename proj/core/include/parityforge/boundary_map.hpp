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

#include <span>
#include <unordered_map>

#include "parityforge/bitmatrix.hpp"

namespace parityforge {

/// Expresses every interior qubit as an XOR of boundary qubits, implied by
/// the placed plaquettes: one row per interior qubit, with a pivot 1 on that
/// qubit's column and all other 1s on boundary columns. Every row lies in
/// the rowspace of the plaquette matrix it was computed from.
class BoundaryMap {
 public:
  BoundaryMap() = default;

  /// Row-reduces p with the interior columns first (in the given order, which
  /// fixes the pivot preference) and keeps the rows pivoting on interior
  /// columns. Throws if some interior qubit obtains no pivot — geometrically
  /// impossible while no forbidden triangle exists.
  static BoundaryMap recompute(const BitMatrix& p, std::span<const int> interior_in_pivot_order);

  const BitMatrix& rows() const { return rows_; }
  std::size_t num_interior() const { return rows_.num_rows(); }

  bool has_row_for(int label) const { return row_of_label_.count(label) != 0; }
  const BitVector& row_for(int label) const;

  /// c XOR the rows of the interior qubits appearing in c; the result is
  /// supported only on boundary columns (and columns untouched by p).
  BitVector to_boundary_form(const BitVector& c) const;

 private:
  BitMatrix rows_;
  std::unordered_map<int, std::size_t> row_of_label_;
};

}  // namespace parityforge

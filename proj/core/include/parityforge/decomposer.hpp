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
#include <vector>

#include "parityforge/layout.hpp"

namespace parityforge {

/// The plaquettes, new qubits and ancillas realizing one constraint in one
/// layer. For a constraint group, free ancillas number exactly one less than
/// the plaquettes, each free ancilla sits in exactly two of them, and the
/// XOR of the plaquette vectors (pins cancelled) equals the target
/// constraint extended with the new parity qubits.
struct PlacementPlan {
  std::vector<std::pair<Position, std::size_t>> new_parity_qubits;  // position, term index
  std::vector<Position> free_ancillas;
  std::vector<Position> fixed_ancillas;
  std::vector<std::pair<Position, PlaquetteShape>> plaquettes;
  GroupId group = kFillerGroup;
};

struct DecomposeOptions {
  /// Convert the walk-start plaquette to a triangle and drop its pin when
  /// that leaves a legal orientation. The compiler disables this wherever
  /// the dropped position is needed to keep the next layer's edge complete.
  bool allow_start_collapse = true;
  /// Same, for the low end of a corner plan's right arm.
  bool allow_corner_low_collapse = true;
};

/// Realizes a constraint whose placed qubits all lie on the current top row,
/// with at most two unplaced terms. New terms land above the leftmost and
/// rightmost constraint qubits; remaining end positions are pinned with
/// fixed ancillas unless collapsed away.
PlacementPlan decompose_top(const Layout& layout, std::span<const QubitId> c_boundary,
                            std::span<const std::size_t> new_terms, GroupId group,
                            const DecomposeOptions& opts = {});

/// Transpose image of decompose_top for constraints on the right edge.
PlacementPlan decompose_right(const Layout& layout, std::span<const QubitId> c_boundary,
                              std::span<const std::size_t> new_terms, GroupId group,
                              const DecomposeOptions& opts = {});

/// Realizes a constraint spanning both the top row and the right column.
/// Up to three new terms: above the leftmost top qubit, diagonally outward
/// from the corner, and rightward of the lowest right-edge qubit. The corner
/// qubit ends up in three plaquettes when it is part of the constraint and
/// in two otherwise (one shell square degrades to a triangle). Degenerate
/// arms fall back to the single-edge forms.
PlacementPlan decompose_corner(const Layout& layout, std::span<const QubitId> c_top,
                               std::span<const QubitId> c_right,
                               std::span<const std::size_t> new_terms, GroupId group,
                               const DecomposeOptions& opts = {});

/// Artificial degree of freedom: one new parity qubit above the upper-left
/// corner and a full row of filler squares, adding exactly one more qubit
/// than plaquettes while keeping all information on the new boundary.
PlacementPlan add_degree_of_freedom(const Layout& layout, std::size_t term_index);

/// First constraint on an empty layout: a lone square (4 terms) or triangle
/// (3 terms) at the origin, qubits assigned bottom-up row-major in the given
/// term order.
PlacementPlan decompose_seed(std::span<const std::size_t> terms, GroupId group);

}  // namespace parityforge

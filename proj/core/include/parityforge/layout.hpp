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

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parityforge/bitmatrix.hpp"

namespace parityforge {

class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Lattice point. Row 0 is the bottom; the layout grows toward larger rows
/// and larger columns.
struct Position {
  int col = 0;
  int row = 0;
  auto operator<=>(const Position&) const = default;
};

enum class QubitKind { Parity, FreeAncilla, FixedAncilla };

/// Plaquette shapes are named by the missing cell corner. TriMissingLL is the
/// orientation that blocks boundary expressibility and is never constructed.
enum class PlaquetteShape { Square, TriMissingUL, TriMissingLR, TriMissingLL };

/// Corner offsets (relative to the cell's lower-left lattice point) that the
/// shape occupies.
std::vector<Position> shape_corners(PlaquetteShape shape);
std::string shape_name(PlaquetteShape shape);

using QubitId = int;
using GroupId = int;
constexpr GroupId kFillerGroup = -1;

struct Plaquette {
  Position cell;
  PlaquetteShape shape = PlaquetteShape::Square;
  GroupId group = kFillerGroup;
};

struct QubitInfo {
  QubitId id = -1;
  Position pos;
  QubitKind kind = QubitKind::Parity;
  std::vector<int> term;  // logical qubits of the parity term; empty for ancillas
};

/// The geometric state: qubits on an integer grid plus plaquettes on unit
/// cells. A value type; compiler search branches copy it freely.
class Layout {
 public:
  QubitId add_qubit(Position pos, QubitKind kind, std::vector<int> term = {});
  void add_plaquette(Position cell, PlaquetteShape shape, GroupId group);

  std::size_t num_qubits() const { return qubits_.size(); }
  /// Qubits keyed by id; ids stay stable across trimming.
  const std::map<QubitId, QubitInfo>& qubits() const { return qubits_; }
  const QubitInfo& qubit(QubitId id) const { return qubits_.at(id); }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  const std::vector<QubitId>& pins() const { return pins_; }

  bool occupied(Position pos) const { return by_pos_.count(pos) != 0; }
  std::optional<QubitId> qubit_at(Position pos) const;
  bool cell_has_plaquette(Position cell) const { return by_cell_.count(cell) != 0; }

  /// Corner qubits of a plaquette, in shape_corners order.
  std::vector<QubitId> plaquette_qubits(const Plaquette& p) const;

  int width() const { return max_col_ + 1 > 0 ? max_col_ + 1 : 0; }
  int height() const { return max_row_ + 1 > 0 ? max_row_ + 1 : 0; }
  bool empty() const { return qubits_.empty(); }

  /// Column order used by plaquette_vector / as_constraint_matrix: ancilla
  /// qubits first (by id), then parity qubits (by id).
  std::vector<QubitId> matrix_columns() const;

  /// Bit vector of a plaquette over matrix_columns().
  BitVector plaquette_vector(const Plaquette& p) const;

  /// One row per plaquette plus one single-bit row per pin, over
  /// matrix_columns() (column labels are qubit ids).
  BitMatrix as_constraint_matrix() const;

  /// Upper-right boundary: qubits whose own cell (the cell with the qubit at
  /// its lower-left corner) carries no plaquette. Once that cell is filled
  /// the qubit is interior and reachable only through the boundary map.
  /// Ordered clockwise from upper-left to lower-right.
  std::vector<QubitId> boundary() const;

  /// Interior qubits (complement of boundary()), ordered by descending
  /// taxicab distance from the top-right corner; the boundary map pivots in
  /// this order.
  std::vector<QubitId> interior_in_pivot_order() const;

  // Used by layout trimming; both validate structural invariants.
  void remove_plaquette(std::size_t index);
  void remove_qubit(QubitId id);

 private:
  std::map<QubitId, QubitInfo> qubits_;
  std::vector<Plaquette> plaquettes_;
  std::vector<QubitId> pins_;
  std::map<Position, QubitId> by_pos_;
  std::map<Position, std::size_t> by_cell_;
  QubitId next_id_ = 0;
  int max_col_ = -1;
  int max_row_ = -1;

  void recompute_bounds();
  void reindex_cells();
};

}  // namespace parityforge

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

#include "parityforge/layout.hpp"

#include <algorithm>

namespace parityforge {

std::vector<Position> shape_corners(PlaquetteShape shape) {
  switch (shape) {
    case PlaquetteShape::Square:
      return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    case PlaquetteShape::TriMissingUL:
      return {{0, 0}, {1, 0}, {1, 1}};
    case PlaquetteShape::TriMissingLR:
      return {{0, 0}, {0, 1}, {1, 1}};
    case PlaquetteShape::TriMissingLL:
      return {{1, 0}, {0, 1}, {1, 1}};
  }
  throw GeometryError("unknown plaquette shape");
}

std::string shape_name(PlaquetteShape shape) {
  switch (shape) {
    case PlaquetteShape::Square:
      return "square";
    case PlaquetteShape::TriMissingUL:
      return "tri_missing_ul";
    case PlaquetteShape::TriMissingLR:
      return "tri_missing_lr";
    case PlaquetteShape::TriMissingLL:
      return "tri_missing_ll";
  }
  return "?";
}

QubitId Layout::add_qubit(Position pos, QubitKind kind, std::vector<int> term) {
  if (pos.col < 0 || pos.row < 0) throw GeometryError("qubit position must be non-negative");
  if (by_pos_.count(pos))
    throw GeometryError("position (" + std::to_string(pos.col) + "," + std::to_string(pos.row) +
                        ") already occupied");
  const QubitId id = next_id_++;
  std::sort(term.begin(), term.end());
  qubits_.emplace(id, QubitInfo{id, pos, kind, std::move(term)});
  by_pos_[pos] = id;
  if (kind == QubitKind::FixedAncilla) pins_.push_back(id);
  max_col_ = std::max(max_col_, pos.col);
  max_row_ = std::max(max_row_, pos.row);
  return id;
}

void Layout::add_plaquette(Position cell, PlaquetteShape shape, GroupId group) {
  if (shape == PlaquetteShape::TriMissingLL)
    throw GeometryError("forbidden orientation: triangle missing the lower-left corner");
  if (by_cell_.count(cell))
    throw GeometryError("cell (" + std::to_string(cell.col) + "," + std::to_string(cell.row) +
                        ") already carries a plaquette");
  for (Position d : shape_corners(shape)) {
    Position corner{cell.col + d.col, cell.row + d.row};
    if (!by_pos_.count(corner))
      throw GeometryError("plaquette corner (" + std::to_string(corner.col) + "," +
                          std::to_string(corner.row) + ") has no qubit");
  }
  by_cell_[cell] = plaquettes_.size();
  plaquettes_.push_back(Plaquette{cell, shape, group});
}

std::optional<QubitId> Layout::qubit_at(Position pos) const {
  auto it = by_pos_.find(pos);
  if (it == by_pos_.end()) return std::nullopt;
  return it->second;
}

std::vector<QubitId> Layout::plaquette_qubits(const Plaquette& p) const {
  std::vector<QubitId> out;
  for (Position d : shape_corners(p.shape)) {
    auto id = qubit_at({p.cell.col + d.col, p.cell.row + d.row});
    if (!id) throw GeometryError("plaquette corner lost its qubit");
    out.push_back(*id);
  }
  return out;
}

std::vector<QubitId> Layout::matrix_columns() const {
  std::vector<QubitId> ancillas, parity;
  for (const auto& [id, info] : qubits_) {
    (info.kind == QubitKind::Parity ? parity : ancillas).push_back(id);
  }
  ancillas.insert(ancillas.end(), parity.begin(), parity.end());
  return ancillas;
}

BitVector Layout::plaquette_vector(const Plaquette& p) const {
  const std::vector<QubitId> cols = matrix_columns();
  BitVector v(cols.size());
  for (QubitId q : plaquette_qubits(p)) {
    auto it = std::find(cols.begin(), cols.end(), q);
    v.set(static_cast<std::size_t>(it - cols.begin()));
  }
  return v;
}

BitMatrix Layout::as_constraint_matrix() const {
  const std::vector<QubitId> cols = matrix_columns();
  BitMatrix m(std::vector<int>(cols.begin(), cols.end()));
  for (const Plaquette& p : plaquettes_) m.add_row(plaquette_vector(p));
  for (QubitId pin : pins_) {
    BitVector v(cols.size());
    auto it = std::find(cols.begin(), cols.end(), pin);
    v.set(static_cast<std::size_t>(it - cols.begin()));
    m.add_row(std::move(v));
  }
  return m;
}

std::vector<QubitId> Layout::boundary() const {
  std::vector<const QubitInfo*> out;
  for (const auto& [id, info] : qubits_) {
    if (!cell_has_plaquette(info.pos)) out.push_back(&info);
  }
  std::sort(out.begin(), out.end(), [](const QubitInfo* a, const QubitInfo* b) {
    if (a->pos.col != b->pos.col) return a->pos.col < b->pos.col;
    return a->pos.row > b->pos.row;
  });
  std::vector<QubitId> ids;
  for (const QubitInfo* q : out) ids.push_back(q->id);
  return ids;
}

std::vector<QubitId> Layout::interior_in_pivot_order() const {
  std::vector<const QubitInfo*> out;
  for (const auto& [id, info] : qubits_) {
    if (cell_has_plaquette(info.pos)) out.push_back(&info);
  }
  const int top_col = max_col_, top_row = max_row_;
  auto dist = [&](const QubitInfo* q) { return (top_col - q->pos.col) + (top_row - q->pos.row); };
  std::sort(out.begin(), out.end(), [&](const QubitInfo* a, const QubitInfo* b) {
    if (dist(a) != dist(b)) return dist(a) > dist(b);
    if (a->pos.col != b->pos.col) return a->pos.col < b->pos.col;
    return a->pos.row < b->pos.row;
  });
  std::vector<QubitId> ids;
  for (const QubitInfo* q : out) ids.push_back(q->id);
  return ids;
}

void Layout::remove_plaquette(std::size_t index) {
  if (index >= plaquettes_.size()) throw GeometryError("plaquette index out of range");
  plaquettes_.erase(plaquettes_.begin() + static_cast<std::ptrdiff_t>(index));
  reindex_cells();
}

void Layout::remove_qubit(QubitId id) {
  auto it = qubits_.find(id);
  if (it == qubits_.end()) throw GeometryError("no such qubit id " + std::to_string(id));
  for (const Plaquette& p : plaquettes_) {
    for (Position d : shape_corners(p.shape)) {
      if (Position{p.cell.col + d.col, p.cell.row + d.row} == it->second.pos)
        throw GeometryError("cannot remove qubit " + std::to_string(id) +
                            ": still a plaquette corner");
    }
  }
  by_pos_.erase(it->second.pos);
  pins_.erase(std::remove(pins_.begin(), pins_.end(), id), pins_.end());
  qubits_.erase(it);
  recompute_bounds();
}

void Layout::recompute_bounds() {
  max_col_ = max_row_ = -1;
  for (const auto& [id, info] : qubits_) {
    max_col_ = std::max(max_col_, info.pos.col);
    max_row_ = std::max(max_row_, info.pos.row);
  }
}

void Layout::reindex_cells() {
  by_cell_.clear();
  for (std::size_t i = 0; i < plaquettes_.size(); ++i) by_cell_[plaquettes_[i].cell] = i;
}

}  // namespace parityforge

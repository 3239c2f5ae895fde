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

#include "parityforge/decomposer.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace parityforge {

namespace {

// Shared walk frame for the two edges. The top edge runs along columns at a
// fixed base row; the right edge is its reflection across the main diagonal
// (along rows at a fixed base column), which swaps TriMissingUL and
// TriMissingLR and maps the forbidden orientation to itself.
struct AxisFrame {
  bool top = true;
  int base = 0;

  Position pos(int along, int out) const {
    return top ? Position{along, base + out} : Position{base + out, along};
  }
  Position cell(int along) const { return pos(along, 0); }
  PlaquetteShape omit_next() const {
    return top ? PlaquetteShape::TriMissingLR : PlaquetteShape::TriMissingUL;
  }
  PlaquetteShape omit_start_out() const {
    return top ? PlaquetteShape::TriMissingUL : PlaquetteShape::TriMissingLR;
  }
  const char* name() const { return top ? "top" : "right"; }
};

void require_free_span(const Layout& layout, const AxisFrame& frame, int lo, int hi) {
  for (int a = lo; a < hi; ++a) {
    if (layout.cell_has_plaquette(frame.cell(a)))
      throw GeometryError("decomposition cell already occupied");
  }
  for (int a = lo; a <= hi; ++a) {
    if (layout.occupied(frame.pos(a, 1)))
      throw GeometryError("new-layer position already occupied");
  }
}

struct EdgePlanInput {
  std::vector<int> support;  // along-coordinates of constraint qubits, sorted
  std::vector<std::size_t> new_terms;
};

PlacementPlan build_edge_plan(const Layout& layout, const AxisFrame& frame,
                              const EdgePlanInput& in, GroupId group,
                              const DecomposeOptions& opts) {
  const int first = in.support.front();
  const int last = std::max(in.support.back(), first + 1);
  const std::set<int> members(in.support.begin(), in.support.end());

  for (int a = first; a <= last; ++a) {
    if (!layout.occupied(frame.pos(a, 0)))
      throw GeometryError("edge is not contiguous across the constraint span");
  }
  require_free_span(layout, frame, first, last);

  // End assignments: the first new term sits at the walk start, the second
  // at the walk end. A single new term tries both ends; the variant with
  // fewer pins (a collapsed start) wins.
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> variants;
  if (in.new_terms.empty()) {
    variants.push_back({std::nullopt, std::nullopt});
  } else if (in.new_terms.size() == 1) {
    variants.push_back({in.new_terms[0], std::nullopt});
    variants.push_back({std::nullopt, in.new_terms[0]});
  } else if (in.new_terms.size() == 2) {
    variants.push_back({in.new_terms[0], in.new_terms[1]});
  } else {
    throw GeometryError("more than 2 new terms for an edge constraint");
  }

  std::optional<PlacementPlan> best;
  for (const auto& [start_term, end_term] : variants) {
    PlacementPlan plan;
    plan.group = group;
    for (int a = first; a < last; ++a) {
      PlaquetteShape shape;
      if (a + 1 == last) {
        shape = members.count(last) ? PlaquetteShape::Square : frame.omit_next();
      } else {
        shape = members.count(a + 1) ? frame.omit_next() : PlaquetteShape::Square;
      }
      plan.plaquettes.emplace_back(frame.cell(a), shape);
    }
    for (int a = first + 1; a < last; ++a) plan.free_ancillas.push_back(frame.pos(a, 1));

    bool start_pinned = false;
    if (start_term)
      plan.new_parity_qubits.emplace_back(frame.pos(first, 1), *start_term);
    else
      start_pinned = true;
    if (end_term)
      plan.new_parity_qubits.emplace_back(frame.pos(last, 1), *end_term);
    else
      plan.fixed_ancillas.push_back(frame.pos(last, 1));

    if (start_pinned) {
      if (opts.allow_start_collapse && plan.plaquettes.front().second == PlaquetteShape::Square) {
        plan.plaquettes.front().second = frame.omit_start_out();
      } else {
        plan.fixed_ancillas.push_back(frame.pos(first, 1));
      }
    }

    if (!best || plan.fixed_ancillas.size() < best->fixed_ancillas.size()) best = std::move(plan);
  }
  return *best;
}

std::vector<int> edge_coords(const Layout& layout, std::span<const QubitId> ids, bool top) {
  const int edge_base = top ? layout.height() - 1 : layout.width() - 1;
  std::vector<int> coords;
  for (QubitId id : ids) {
    const Position p = layout.qubit(id).pos;
    const int fixed = top ? p.row : p.col;
    if (fixed != edge_base)
      throw GeometryError(std::string("constraint qubit not on the ") + (top ? "top" : "right") +
                          " edge");
    coords.push_back(top ? p.col : p.row);
  }
  std::sort(coords.begin(), coords.end());
  return coords;
}

PlacementPlan decompose_edge(const Layout& layout, std::span<const QubitId> c_boundary,
                             std::span<const std::size_t> new_terms, GroupId group,
                             const DecomposeOptions& opts, bool top) {
  if (c_boundary.empty()) throw GeometryError("edge constraint needs at least one placed qubit");
  if (new_terms.size() > 2) throw GeometryError("more than 2 new terms for an edge constraint");

  AxisFrame frame{top, top ? layout.height() - 1 : layout.width() - 1};
  EdgePlanInput in;
  in.support = edge_coords(layout, c_boundary, top);
  in.new_terms.assign(new_terms.begin(), new_terms.end());

  const int span_limit = top ? layout.width() - 1 : layout.height() - 1;
  const int last = std::max(in.support.back(), in.support.front() + 1);
  if (last > span_limit)
    throw GeometryError("constraint span exceeds the current edge");

  return build_edge_plan(layout, frame, in, group, opts);
}

}  // namespace

PlacementPlan decompose_top(const Layout& layout, std::span<const QubitId> c_boundary,
                            std::span<const std::size_t> new_terms, GroupId group,
                            const DecomposeOptions& opts) {
  return decompose_edge(layout, c_boundary, new_terms, group, opts, /*top=*/true);
}

PlacementPlan decompose_right(const Layout& layout, std::span<const QubitId> c_boundary,
                              std::span<const std::size_t> new_terms, GroupId group,
                              const DecomposeOptions& opts) {
  return decompose_edge(layout, c_boundary, new_terms, group, opts, /*top=*/false);
}

PlacementPlan decompose_corner(const Layout& layout, std::span<const QubitId> c_top,
                               std::span<const QubitId> c_right,
                               std::span<const std::size_t> new_terms, GroupId group,
                               const DecomposeOptions& opts) {
  const int w = layout.width(), h = layout.height();
  const Position corner_pos{w - 1, h - 1};

  bool corner_in_c = false;
  std::vector<int> top_arm, right_arm;
  for (QubitId id : c_top) {
    const Position p = layout.qubit(id).pos;
    if (p == corner_pos) {
      corner_in_c = true;
    } else if (p.row == h - 1) {
      top_arm.push_back(p.col);
    } else {
      throw GeometryError("corner constraint qubit not on the top edge");
    }
  }
  for (QubitId id : c_right) {
    const Position p = layout.qubit(id).pos;
    if (p == corner_pos) {
      corner_in_c = true;
    } else if (p.col == w - 1) {
      right_arm.push_back(p.row);
    } else {
      throw GeometryError("corner constraint qubit not on the right edge");
    }
  }
  if (new_terms.size() > 3) throw GeometryError("more than 3 new terms for a corner constraint");

  // Degenerate arms reduce to the single-edge forms.
  if (top_arm.empty() && right_arm.empty()) {
    if (!corner_in_c) throw GeometryError("empty corner constraint");
    if (!layout.occupied(corner_pos)) throw GeometryError("corner position has no qubit");
    if (layout.cell_has_plaquette(corner_pos))
      throw GeometryError("corner cell already occupied");
    for (Position p : {Position{w - 1, h}, Position{w, h - 1}, Position{w, h}}) {
      if (layout.occupied(p)) throw GeometryError("new-layer position already occupied");
    }
    PlacementPlan plan;
    plan.group = group;
    PlaquetteShape shape = PlaquetteShape::Square;
    const Position ends[3] = {{w - 1, h}, {w, h}, {w, h - 1}};
    for (std::size_t i = 0; i < 3; ++i) {
      if (i < new_terms.size()) {
        plan.new_parity_qubits.emplace_back(ends[i], new_terms[i]);
      } else if (i == 2 && opts.allow_corner_low_collapse) {
        shape = PlaquetteShape::TriMissingLR;  // omit the unpinned low end
      } else {
        plan.fixed_ancillas.push_back(ends[i]);
      }
    }
    plan.plaquettes.emplace_back(corner_pos, shape);
    return plan;
  }
  if (right_arm.empty()) {
    std::vector<QubitId> all(c_top.begin(), c_top.end());
    all.insert(all.end(), c_right.begin(), c_right.end());
    if (new_terms.size() > 2) throw GeometryError("more than 2 new terms for an edge constraint");
    return decompose_top(layout, all, new_terms, group, opts);
  }
  if (top_arm.empty()) {
    std::vector<QubitId> all(c_top.begin(), c_top.end());
    all.insert(all.end(), c_right.begin(), c_right.end());
    if (new_terms.size() > 2) throw GeometryError("more than 2 new terms for an edge constraint");
    return decompose_right(layout, all, new_terms, group, opts);
  }

  std::sort(top_arm.begin(), top_arm.end());
  std::sort(right_arm.begin(), right_arm.end());
  const std::set<int> top_members(top_arm.begin(), top_arm.end());
  const std::set<int> right_members(right_arm.begin(), right_arm.end());
  const int col_l = top_arm.front();
  const int row_d = right_arm.front();

  for (int c = col_l; c <= w - 1; ++c) {
    if (!layout.occupied({c, h - 1})) throw GeometryError("top edge not contiguous");
  }
  for (int r = row_d; r <= h - 1; ++r) {
    if (!layout.occupied({w - 1, r})) throw GeometryError("right edge not contiguous");
  }
  AxisFrame top_frame{true, h - 1};
  AxisFrame right_frame{false, w - 1};
  require_free_span(layout, top_frame, col_l, w - 1);
  require_free_span(layout, right_frame, row_d, h - 1);
  if (layout.occupied({w, h})) throw GeometryError("new-layer position already occupied");

  PlacementPlan plan;
  plan.group = group;

  // Top arm, walking right toward the corner.
  for (int a = col_l; a <= w - 2; ++a) {
    PlaquetteShape shape;
    if (a + 1 <= w - 2) {
      shape = top_members.count(a + 1) ? PlaquetteShape::TriMissingLR : PlaquetteShape::Square;
    } else {
      // Shell square next to the corner; degrades when the corner qubit is
      // not part of the constraint, leaving it in exactly two plaquettes.
      shape = corner_in_c ? PlaquetteShape::Square : PlaquetteShape::TriMissingLR;
    }
    plan.plaquettes.emplace_back(Position{a, h - 1}, shape);
  }
  plan.plaquettes.emplace_back(corner_pos, PlaquetteShape::Square);
  // Right arm, walking down from the corner.
  for (int r = h - 2; r >= row_d; --r) {
    PlaquetteShape shape;
    if (r + 1 == h - 1) {
      shape = PlaquetteShape::Square;
    } else {
      shape = right_members.count(r + 1) ? PlaquetteShape::TriMissingUL : PlaquetteShape::Square;
    }
    plan.plaquettes.emplace_back(Position{w - 1, r}, shape);
  }

  for (int a = col_l + 1; a <= w - 1; ++a) plan.free_ancillas.push_back({a, h});
  for (int r = row_d + 1; r <= h - 1; ++r) plan.free_ancillas.push_back({w, r});

  const Position ends[3] = {{col_l, h}, {w, h}, {w, row_d}};
  bool low_end_open = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i < new_terms.size()) {
      plan.new_parity_qubits.emplace_back(ends[i], new_terms[i]);
    } else if (i == 2) {
      low_end_open = true;
    } else {
      plan.fixed_ancillas.push_back(ends[i]);
    }
  }
  if (low_end_open) {
    // The bottom right-arm cell is the last plaquette appended; collapse it
    // when allowed, otherwise pin the low end.
    auto& bottom_entry = plan.plaquettes.back();
    if (opts.allow_corner_low_collapse && bottom_entry.second == PlaquetteShape::Square) {
      bottom_entry.second = PlaquetteShape::TriMissingLR;
    } else {
      plan.fixed_ancillas.push_back(ends[2]);
    }
  }
  return plan;
}

PlacementPlan add_degree_of_freedom(const Layout& layout, std::size_t term_index) {
  PlacementPlan plan;
  plan.group = kFillerGroup;
  if (layout.empty()) {
    plan.new_parity_qubits.emplace_back(Position{0, 0}, term_index);
    return plan;
  }
  const int w = layout.width(), h = layout.height();
  for (int c = 0; c < w; ++c) {
    if (!layout.occupied({c, h - 1}))
      throw GeometryError("top row incomplete; cannot add a degree of freedom");
    if (layout.occupied({c, h})) throw GeometryError("new-layer position already occupied");
  }
  plan.new_parity_qubits.emplace_back(Position{0, h}, term_index);
  for (int c = 1; c < w; ++c) plan.free_ancillas.push_back({c, h});
  for (int c = 0; c <= w - 2; ++c)
    plan.plaquettes.emplace_back(Position{c, h - 1}, PlaquetteShape::Square);
  return plan;
}

PlacementPlan decompose_seed(std::span<const std::size_t> terms, GroupId group) {
  PlacementPlan plan;
  plan.group = group;
  if (terms.size() == 4) {
    const Position spots[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (std::size_t i = 0; i < 4; ++i) plan.new_parity_qubits.emplace_back(spots[i], terms[i]);
    plan.plaquettes.emplace_back(Position{0, 0}, PlaquetteShape::Square);
  } else if (terms.size() == 3) {
    // TriMissingLR keeps the seed's top row complete.
    const Position spots[3] = {{0, 0}, {0, 1}, {1, 1}};
    for (std::size_t i = 0; i < 3; ++i) plan.new_parity_qubits.emplace_back(spots[i], terms[i]);
    plan.plaquettes.emplace_back(Position{0, 0}, PlaquetteShape::TriMissingLR);
  } else {
    throw GeometryError("seed constraint must have 3 or 4 terms");
  }
  return plan;
}

}  // namespace parityforge

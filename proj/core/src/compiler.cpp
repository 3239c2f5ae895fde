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

#include "parityforge/compiler.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "parityforge/parallel.hpp"
#include "parityforge/verifier.hpp"

namespace parityforge {

namespace {

enum class EdgeKind { Seed, Top, Right, Corner };

// Plans remember which layer form produced them through the selection trace;
// the seal step needs the distinction, so it rides along in Selection::score
// ordering and this side channel.
struct PlannedOption {
  Selection sel;
  EdgeKind kind = EdgeKind::Top;
};

bool score_less(const Selection& a, const Selection& b) {
  if (a.score != b.score) return a.score < b.score;
  return a.constraint.lex_less(b.constraint);
}

std::vector<std::size_t> sorted_by_term_lex(const ProblemSpec& p, std::vector<std::size_t> terms) {
  std::sort(terms.begin(), terms.end(), [&](std::size_t a, std::size_t b) {
    return p.terms[a].qubits < p.terms[b].qubits;
  });
  return terms;
}

}  // namespace

Layout place_side_conditions(const ProblemSpec& p) {
  Layout layout;
  std::vector<QubitId> qubit_of_term(p.num_terms(), -1);
  int col = 0;
  for (const SideCondition& cond : p.side_conditions) {
    // Terms already placed by earlier conditions must sit at the right end of
    // the row so this condition's block stays contiguous.
    std::vector<int> shared_cols;
    std::vector<std::size_t> fresh;
    std::set<std::size_t> seen;
    for (std::size_t j : cond.term_indices) {
      if (!seen.insert(j).second) continue;
      if (qubit_of_term[j] >= 0)
        shared_cols.push_back(layout.qubit(qubit_of_term[j]).pos.col);
      else
        fresh.push_back(j);
    }
    if (!shared_cols.empty()) {
      std::sort(shared_cols.begin(), shared_cols.end());
      const int k = static_cast<int>(shared_cols.size());
      if (shared_cols.front() != col - k || shared_cols.back() != col - 1)
        throw CompileError("unsatisfiable side-condition placement");
    }
    for (std::size_t j : fresh) {
      qubit_of_term[j] = layout.add_qubit({col, 0}, QubitKind::Parity, p.terms[j].qubits);
      ++col;
    }
  }
  return layout;
}

CompilerState::CompilerState(const ProblemSpec& p, const CompilerConfig& cfg)
    : problem_(&p), cfg_(cfg), cspace_(constraint_space(p)) {
  if (cfg_.beam_width < 1) throw CompileError("beam width must be >= 1");
  if (cfg_.candidate_combination_depth < 1) throw CompileError("candidate depth must be >= 1");
  qubit_of_term_.assign(p.num_terms(), -1);
  dof_used_.assign(p.num_terms(), false);
  if (!p.side_conditions.empty()) {
    layout_ = place_side_conditions(p);
    for (const auto& [id, info] : layout_.qubits()) {
      const std::size_t j = p.find_term(info.term);
      qubit_of_term_[j] = id;
    }
  }
  dim_trace_.clear();
  // Initial caches over an empty plaquette matrix.
  refresh_caches_ = [] {};  // placeholder removed below
}

// ---------------------------------------------------------------------------

int CompilerState::label_of_qubit(QubitId id) const {
  const QubitInfo& info = layout_.qubit(id);
  if (info.kind == QubitKind::Parity) {
    const std::size_t j = problem_->find_term(info.term);
    return problem_->term_label(j);
  }
  return label_of_ancilla(id);
}

BitMatrix CompilerState::materialize_p() const {
  std::vector<int> labels = ancilla_labels_;
  for (std::size_t j = 0; j < problem_->num_terms(); ++j) labels.push_back(problem_->term_label(j));
  BitMatrix m(std::move(labels));
  for (const auto& row : p_rows_) {
    BitVector v(m.num_cols());
    for (int label : row) v.set(m.index_of_label(label));
    m.add_row(std::move(v));
  }
  return m;
}

BitMatrix CompilerState::implied_space() const {
  return eliminate_columns(materialize_p(), ancilla_labels_);
}

std::size_t CompilerState::implied_dimension() const { return implied_space().num_rows(); }

bool CompilerState::done() const {
  const BitMatrix implied = implied_space();
  for (std::size_t r = 0; r < cspace_.basis.num_rows(); ++r) {
    if (!in_rowspace(implied, cspace_.basis.row(r))) return false;
  }
  return true;
}

BitVector CompilerState::extend_to_columns(const BitVector& term_vec, const BitMatrix& p) const {
  BitVector out(p.num_cols());
  for (std::size_t j : term_vec.set_indices()) {
    out.set(p.index_of_label(problem_->term_label(j)));
  }
  return out;
}

std::vector<BitVector> CompilerState::candidates(const BitMatrix& implied) const {
  const std::size_t dim = cspace_.dimension();
  const std::size_t depth =
      std::min<std::size_t>(static_cast<std::size_t>(cfg_.candidate_combination_depth), dim);
  std::vector<BitVector> out;

  std::vector<std::size_t> combo;
  auto emit = [&](const BitVector& v) {
    if (v.any() && !in_rowspace(implied, v)) out.push_back(v);
  };
  std::function<void(std::size_t, std::size_t, BitVector)> rec =
      [&](std::size_t start, std::size_t remaining, BitVector acc) {
        if (remaining == 0) return;
        for (std::size_t i = start; i < dim; ++i) {
          BitVector next = acc ^ cspace_.basis.row(i);
          emit(next);
          rec(i + 1, remaining - 1, next);
        }
      };
  rec(0, depth, BitVector(cspace_.basis.num_cols()));

  std::sort(out.begin(), out.end(), [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Selection> CompilerState::plan_candidate(const BitVector& cand,
                                                       const BitMatrix& p) const {
  const BitVector bf = bmap_.to_boundary_form(extend_to_columns(cand, p));

  std::vector<QubitId> support;
  std::vector<std::size_t> new_terms;
  for (std::size_t idx : bf.set_indices()) {
    const int label = p.column_labels()[idx];
    if (label < 0) {
      support.push_back(-(label)-1);
    } else {
      const std::size_t j = problem_->term_of_label(label);
      if (qubit_of_term_[j] >= 0)
        support.push_back(qubit_of_term_[j]);
      else
        new_terms.push_back(j);
    }
  }
  new_terms = sorted_by_term_lex(*problem_, std::move(new_terms));

  const int w = layout_.width(), h = layout_.height();
  const Position corner{w - 1, h - 1};
  std::vector<QubitId> on_top, on_right;
  bool has_corner = false, has_top = false, has_right = false;
  for (QubitId id : support) {
    const Position pos = layout_.qubit(id).pos;
    if (pos == corner) {
      has_corner = true;
    } else if (pos.row == h - 1) {
      has_top = true;
    } else if (pos.col == w - 1) {
      has_right = true;
    } else {
      return std::nullopt;  // not reachable from the current shell
    }
    if (pos.row == h - 1 && pos.col < w - 1) on_top.push_back(id);
    if (pos.col == w - 1 && pos.row < h - 1) on_right.push_back(id);
  }

  auto make_sel = [&](PlacementPlan plan, EdgeKind kind, std::size_t footprint) {
    Selection sel;
    sel.constraint = cand;
    sel.plan = std::move(plan);
    sel.score = {sel.plan.plaquettes.size(), sel.plan.free_ancillas.size(), footprint};
    sel.edge_tag = static_cast<int>(kind);
    return sel;
  };

  std::optional<Selection> best;
  auto consider = [&](Selection s) {
    if (!best || score_less(s, *best)) best = std::move(s);
  };

  if (support.empty()) {
    if (layout_.empty() && (new_terms.size() == 3 || new_terms.size() == 4)) {
      try {
        consider(make_sel(decompose_seed(new_terms, next_group_), EdgeKind::Seed, 1));
      } catch (const GeometryError&) {
      }
    }
    return best;
  }

  DecomposeOptions opts;
  if (!has_right && !has_corner && has_top) {
    // pure top-edge constraint
    if (new_terms.size() <= 2) {
      opts.allow_start_collapse = false;  // keeps the next top row complete
      try {
        PlacementPlan plan = decompose_top(layout_, support, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Top, plan_footprint_));
      } catch (const GeometryError&) {
      }
    }
  } else if (!has_top && !has_corner && has_right) {
    if (new_terms.size() <= 2) {
      int low = h;
      for (QubitId id : support) low = std::min(low, layout_.qubit(id).pos.row);
      opts.allow_start_collapse = (low == column_bottom(w - 1));
      try {
        PlacementPlan plan = decompose_right(layout_, support, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Right, plan_footprint_));
      } catch (const GeometryError&) {
      }
    }
  } else if (has_top && !has_right) {
    // top row possibly including the corner qubit
    if (new_terms.size() <= 2) {
      opts.allow_start_collapse = false;
      try {
        PlacementPlan plan = decompose_top(layout_, support, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Top, plan_footprint_));
      } catch (const GeometryError&) {
      }
    }
  } else if (has_right && !has_top) {
    if (new_terms.size() <= 2) {
      int low = h;
      for (QubitId id : support) low = std::min(low, layout_.qubit(id).pos.row);
      opts.allow_start_collapse = (low == column_bottom(w - 1));
      try {
        PlacementPlan plan = decompose_right(layout_, support, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Right, plan_footprint_));
      } catch (const GeometryError&) {
      }
    }
  } else if (!has_top && !has_right && has_corner) {
    if (new_terms.size() <= 3) {
      opts.allow_corner_low_collapse = (h - 1 == column_bottom(w - 1));
      std::vector<QubitId> ctop = {*layout_.qubit_at(corner)};
      try {
        PlacementPlan plan = decompose_corner(layout_, ctop, {}, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Corner, 1));
      } catch (const GeometryError&) {
      }
    }
  } else {
    // spans both edges
    if (new_terms.size() <= 3 && !on_top.empty() && !on_right.empty()) {
      int row_d = h;
      for (QubitId id : on_right) row_d = std::min(row_d, layout_.qubit(id).pos.row);
      opts.allow_corner_low_collapse = (row_d == column_bottom(w - 1));
      std::vector<QubitId> ctop = on_top;
      if (has_corner) ctop.push_back(*layout_.qubit_at(corner));
      try {
        PlacementPlan plan = decompose_corner(layout_, ctop, on_right, new_terms, next_group_, opts);
        consider(make_sel(std::move(plan), EdgeKind::Corner, plan_footprint_));
      } catch (const GeometryError&) {
      }
    }
  }
  return best;
}

}  // namespace parityforge

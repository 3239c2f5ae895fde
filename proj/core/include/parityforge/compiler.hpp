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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parityforge/boundary_map.hpp"
#include "parityforge/decomposer.hpp"
#include "parityforge/layout.hpp"
#include "parityforge/problem.hpp"

namespace parityforge {

class CompileError : public std::runtime_error {
 public:
  explicit CompileError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompilerConfig {
  enum class Strategy { Greedy, Beam };
  Strategy strategy = Strategy::Greedy;
  int beam_width = 4;
  int candidate_combination_depth = 2;  // max basis rows XORed to form candidates
  int max_layers = 64;
  std::uint64_t rng_seed = 0;  // carried for reproducibility records; strategies are deterministic
  bool trim = true;
};

struct CompiledStats {
  std::size_t plaquettes = 0;
  std::size_t free_ancillas = 0;
  std::size_t fixed_ancillas = 0;
  std::size_t layers = 0;
};

/// Final layout plus the constraint each group realizes (over parity-term
/// columns), summary statistics, and the problem carried through for the
/// verifier.
struct CompiledLayout {
  Layout layout;
  std::map<GroupId, BitVector> groups;
  CompiledStats stats;
  ProblemSpec problem;
  /// Implied-constraint-space dimension after each placed group.
  std::vector<std::size_t> dim_trace;
};

/// Which shell the plan occupies; drives the filler seal.
enum class EdgeKind { Seed, Top, Right, Corner };

/// One step decision: either a constraint with its placement plan, or the
/// directive to add an artificial degree of freedom first.
struct Selection {
  bool add_dof = false;
  std::size_t dof_term = 0;             // term placed by the artificial constraint
  BitVector constraint;                 // chosen candidate over term columns
  PlacementPlan plan;
  EdgeKind edge = EdgeKind::Top;
  std::array<std::size_t, 3> score{};   // (new plaquettes, new free ancillas, footprint width)
};

/// Seeds row 0 with the parity qubits of side-condition terms, each
/// condition's qubits contiguous, conditions left-to-right in input order.
Layout place_side_conditions(const ProblemSpec& p);

/// One compilation in progress. A value type: beam search snapshots and
/// mutates copies, and merges results in a deterministic order.
class CompilerState {
 public:
  CompilerState(const ProblemSpec& p, const CompilerConfig& cfg);

  bool done() const;
  std::size_t layers() const { return layers_; }
  std::size_t implied_dimension() const;
  const Layout& layout() const { return layout_; }
  const BoundaryMap& boundary_map() const { return bmap_; }
  const std::vector<std::size_t>& dim_trace() const { return dim_trace_; }

  /// Best next step at this state (greedy choice). Throws CompileError when
  /// no step exists.
  Selection select_constraint() const;

  /// All viable next steps, best first, capped at `limit`.
  std::vector<Selection> ranked_options(std::size_t limit) const;

  /// Applies a selection: places the plan, seals the layer with fillers,
  /// recomputes the boundary map, and checks the dimension invariant.
  void apply(const Selection& sel);

  /// Appends terms that never occur in any constraint along the bottom row
  /// and packages the result.
  CompiledLayout finish() const;

  std::size_t total_free_ancillas() const;
  std::size_t total_fixed_ancillas() const;
  /// Deterministic tie-break key: the sequence of applied choices.
  const std::string& trace() const { return trace_; }

 private:
  const ProblemSpec* problem_;
  CompilerConfig cfg_;
  ConstraintSpace cspace_;
  Layout layout_;
  BoundaryMap bmap_;
  BitMatrix mat_p_;    // plaquette matrix over [ancilla columns][term columns]
  BitMatrix implied_;  // mat_p_ with ancilla columns eliminated

  std::vector<std::vector<int>> p_rows_;          // rows of P as label lists
  std::vector<int> ancilla_labels_;               // column labels of placed ancillas
  std::vector<QubitId> qubit_of_term_;            // -1 when unplaced
  std::map<GroupId, BitVector> groups_;
  GroupId next_group_ = 0;
  std::size_t layers_ = 0;
  std::size_t group_plaquettes_ = 0;              // excluding fillers
  std::size_t group_free_ancillas_ = 0;           // excluding filler ancillas
  std::vector<std::size_t> dim_trace_;
  std::vector<bool> dof_used_;                    // artificial constraint used per term
  std::string trace_;

  int label_of_ancilla(QubitId id) const { return -(id + 1); }
  void refresh_caches();
  BitMatrix materialize_p() const;
  BitVector extend_to_columns(const BitVector& term_vec) const;
  std::vector<BitVector> candidates() const;
  std::optional<Selection> plan_candidate(const BitVector& cand) const;
  Selection dof_selection(const std::vector<BitVector>& cands) const;
  void apply_plan(const PlacementPlan& plan);
  void place_filler_square(Position cell);
  void seal_after(const Selection& sel, int w_old, int h_old, int right_bottom_old);
  int column_bottom(int col) const;
};

CompiledLayout compile(const ProblemSpec& p, const CompilerConfig& cfg = {});

/// Greedily removes filler plaquettes (outermost first) and orphaned
/// ancillas whenever the rowspace certificate still holds afterwards.
CompiledLayout trim_layout(CompiledLayout cl);

}  // namespace parityforge

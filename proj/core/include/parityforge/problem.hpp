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
#include <stdexcept>
#include <string>
#include <vector>

#include "parityforge/bitmatrix.hpp"

namespace parityforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = -1, int column = -1)
      : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ")"
                                     : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// One interaction term: a set of logical qubits with a real coefficient.
/// Coefficients are metadata only; the layout construction is structural.
struct Term {
  std::vector<int> qubits;  // sorted, 1-based, duplicate-free
  double coeff = 0.0;

  bool operator==(const Term& other) const { return qubits == other.qubits; }
};

/// Polynomial side condition: a weighted sum of terms restricted to a set of
/// allowed values. Only the geometric adjacency requirement is compiled; the
/// values ride along as data.
struct SideCondition {
  std::vector<std::size_t> term_indices;  // into ProblemSpec::terms
  std::vector<double> coeffs;
  std::vector<long long> values;
};

struct ProblemSpec {
  int num_logical = 0;
  std::vector<Term> terms;
  std::vector<SideCondition> side_conditions;

  std::size_t num_terms() const { return terms.size(); }

  /// Column label of logical qubit i (1-based) in the interaction matrix.
  static int logical_label(int i) { return i; }
  /// Column label of the parity qubit for term j. Shared by the interaction
  /// matrix, the constraint space, and the compiler's working matrices.
  int term_label(std::size_t j) const { return num_logical + 1 + static_cast<int>(j); }
  std::size_t term_of_label(int label) const {
    return static_cast<std::size_t>(label - num_logical - 1);
  }

  /// Index of the term with the given qubit set, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find_term(const std::vector<int>& sorted_qubits) const;
};

/// Basis of the cyclic-constraint space over parity-qubit columns, in
/// reduced form. Dimension equals num_terms minus the rank of the logical
/// block of the interaction matrix.
struct ConstraintSpace {
  BitMatrix basis;
  std::size_t dimension() const { return basis.num_rows(); }
};

/// Parses and validates a problem file (JSON). Terms referenced only by side
/// conditions are appended to the term list with coefficient zero so they
/// receive parity qubits.
ProblemSpec parse_problem(const std::string& text);

/// Canonical JSON for a problem, suitable for byte-compare round trips.
std::string problem_to_json(const ProblemSpec& p);

/// The interaction matrix: one row per term, with ones on the term's logical
/// columns and a single one on the term's parity column. Logical columns
/// first, parity columns in term order.
BitMatrix build_interaction_matrix(const ProblemSpec& p);

ConstraintSpace constraint_space(const ProblemSpec& p);

/// Rank of the logical block of the interaction matrix (used by the counting
/// law dimension = num_terms - logical_rank).
std::size_t logical_rank(const ProblemSpec& p);

}  // namespace parityforge

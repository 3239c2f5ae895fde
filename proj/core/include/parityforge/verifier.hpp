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

#include <optional>
#include <string>
#include <vector>

#include "parityforge/compiler.hpp"
#include "parityforge/json_io.hpp"
#include "parityforge/problem.hpp"

namespace parityforge {

/// Exhaustive oracles run only up to this many placed qubits; larger layouts
/// get rank certification only.
constexpr std::size_t kExhaustiveQubitCap = 24;

struct RowspaceReport {
  bool pass = false;
  std::size_t dim_implied = 0;
  std::size_t dim_required = 0;
  std::string message;  // falsifying vector when failing
};

struct BruteForceReport {
  bool ran = false;  // false above the exhaustive cap
  bool pass = false;
  std::size_t survivor_count = 0;
  std::string message;
};

struct EnergyReport {
  bool ran = false;
  bool pass = false;
  double physical_min = 0.0;
  double logical_min = 0.0;
  std::string message;
};

struct GeometryReport {
  bool pass = false;
  std::vector<std::string> violations;
};

struct VerificationReport {
  RowspaceReport rowspace;
  BruteForceReport brute_force;
  EnergyReport energy;
  GeometryReport geometry;
  bool all_pass() const {
    return rowspace.pass && geometry.pass && (!brute_force.ran || brute_force.pass) &&
           (!energy.ran || energy.pass);
  }
};

/// Rebuilds the plaquette matrix from the layout document alone and the
/// constraint space from the problem alone, then checks that eliminating all
/// ancilla columns leaves exactly the required constraint space.
RowspaceReport verify_rowspace(const LayoutDoc& doc, const ProblemSpec& p);
RowspaceReport verify_rowspace(const CompiledLayout& cl);

/// Enumerates every +-1 assignment of the placed qubits, keeps those
/// satisfying all plaquettes and pins, and compares the surviving parity
/// patterns against the images of all logical states. Also checks the
/// survivor count 2^(qubits - rank).
BruteForceReport brute_force_check(const LayoutDoc& doc, const ProblemSpec& p);
BruteForceReport brute_force_check(const CompiledLayout& cl);

/// Compares the physical energy spectrum over valid states with the logical
/// spectrum: equal minima, equal multisets up to the uniform degeneracy
/// factor. Spin convention: bit 1 is spin -1; a satisfied plaquette has
/// corner-bit XOR zero.
EnergyReport energy_equivalence_check(const LayoutDoc& doc, const ProblemSpec& p);
EnergyReport energy_equivalence_check(const CompiledLayout& cl);

/// Structural checks: no forbidden triangle, corners occupied, unique
/// positions/cells, pin consistency, contiguous columns, side-condition
/// adjacency on row 0.
GeometryReport geometry_check(const LayoutDoc& doc, const ProblemSpec& p);
GeometryReport geometry_check(const CompiledLayout& cl);

VerificationReport verify_all(const LayoutDoc& doc, const ProblemSpec& p,
                              bool exhaustive = true);
VerificationReport verify_all(const CompiledLayout& cl, bool exhaustive = true);

std::string report_to_json(const VerificationReport& r);

}  // namespace parityforge

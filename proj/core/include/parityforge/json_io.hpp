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

#include <string>
#include <vector>

#include "parityforge/layout.hpp"
#include "parityforge/problem.hpp"

namespace parityforge {

/// Serialization-level view of a layout. Unlike Layout it performs no
/// geometric validation, so the verifier can load and judge arbitrary files
/// (including ones carrying the forbidden triangle orientation).
struct QubitDoc {
  int id = 0;
  int col = 0;
  int row = 0;
  std::string kind;       // "parity" | "ancilla" | "fixed"
  std::vector<int> term;  // parity qubits only
};

struct PlaquetteDoc {
  int cell_col = 0;
  int cell_row = 0;
  std::string shape;  // "square" | "tri_missing_ul" | "tri_missing_lr" | ...
  bool filler = false;
  GroupId group = 0;
};

struct LayoutDoc {
  std::vector<QubitDoc> qubits;
  std::vector<PlaquetteDoc> plaquettes;
  std::vector<int> pins;
};

LayoutDoc layout_to_doc(const Layout& layout);

/// Rebuilds a validated Layout; throws GeometryError on anything the model
/// would never produce.
Layout doc_to_layout(const LayoutDoc& doc);

/// Canonical JSON bytes: fixed key order, qubits sorted by id, pins sorted.
/// Identical layouts serialize identically.
std::string doc_to_json(const LayoutDoc& doc);

LayoutDoc parse_layout(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace parityforge

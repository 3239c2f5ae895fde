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

#include "parityforge/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace parityforge {

namespace {
using ordered_json = nlohmann::ordered_json;

std::string kind_name(QubitKind kind) {
  switch (kind) {
    case QubitKind::Parity:
      return "parity";
    case QubitKind::FreeAncilla:
      return "ancilla";
    case QubitKind::FixedAncilla:
      return "fixed";
  }
  return "?";
}
}  // namespace

LayoutDoc layout_to_doc(const Layout& layout) {
  LayoutDoc doc;
  for (const auto& [id, info] : layout.qubits()) {
    QubitDoc q;
    q.id = id;
    q.col = info.pos.col;
    q.row = info.pos.row;
    q.kind = kind_name(info.kind);
    q.term = info.term;
    doc.qubits.push_back(std::move(q));
  }
  for (const Plaquette& p : layout.plaquettes()) {
    PlaquetteDoc pd;
    pd.cell_col = p.cell.col;
    pd.cell_row = p.cell.row;
    pd.shape = shape_name(p.shape);
    pd.filler = (p.group == kFillerGroup);
    pd.group = p.group;
    doc.plaquettes.push_back(std::move(pd));
  }
  doc.pins = layout.pins();
  std::sort(doc.pins.begin(), doc.pins.end());
  return doc;
}

Layout doc_to_layout(const LayoutDoc& doc) {
  Layout layout;
  std::vector<QubitDoc> qubits = doc.qubits;
  std::sort(qubits.begin(), qubits.end(),
            [](const QubitDoc& a, const QubitDoc& b) { return a.id < b.id; });
  std::map<int, QubitId> remap;
  for (const QubitDoc& q : qubits) {
    QubitKind kind;
    if (q.kind == "parity")
      kind = QubitKind::Parity;
    else if (q.kind == "ancilla")
      kind = QubitKind::FreeAncilla;
    else if (q.kind == "fixed")
      kind = QubitKind::FixedAncilla;
    else
      throw GeometryError("unknown qubit kind \"" + q.kind + "\"");
    remap[q.id] = layout.add_qubit({q.col, q.row}, kind, q.term);
  }
  for (const PlaquetteDoc& p : doc.plaquettes) {
    PlaquetteShape shape;
    if (p.shape == "square")
      shape = PlaquetteShape::Square;
    else if (p.shape == "tri_missing_ul")
      shape = PlaquetteShape::TriMissingUL;
    else if (p.shape == "tri_missing_lr")
      shape = PlaquetteShape::TriMissingLR;
    else
      throw GeometryError("unknown or forbidden plaquette shape \"" + p.shape + "\"");
    layout.add_plaquette({p.cell_col, p.cell_row}, shape, p.filler ? kFillerGroup : p.group);
  }
  return layout;
}

std::string doc_to_json(const LayoutDoc& doc) {
  ordered_json out;
  out["qubits"] = ordered_json::array();
  std::vector<QubitDoc> qubits = doc.qubits;
  std::sort(qubits.begin(), qubits.end(),
            [](const QubitDoc& a, const QubitDoc& b) { return a.id < b.id; });
  for (const QubitDoc& q : qubits) {
    ordered_json jq;
    jq["id"] = q.id;
    jq["col"] = q.col;
    jq["row"] = q.row;
    jq["kind"] = q.kind;
    if (q.kind == "parity") jq["term"] = q.term;
    out["qubits"].push_back(jq);
  }
  out["plaquettes"] = ordered_json::array();
  for (const PlaquetteDoc& p : doc.plaquettes) {
    ordered_json jp;
    jp["cell"] = {p.cell_col, p.cell_row};
    jp["shape"] = p.shape;
    if (p.filler)
      jp["group"] = "filler";
    else
      jp["group"] = p.group;
    out["plaquettes"].push_back(jp);
  }
  std::vector<int> pins = doc.pins;
  std::sort(pins.begin(), pins.end());
  out["pins"] = pins;
  return out.dump(2) + "\n";
}

LayoutDoc parse_layout(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed layout JSON: " + std::string(e.what()));
  }
  LayoutDoc doc;
  if (!j.is_object() || !j.contains("qubits") || !j.contains("plaquettes"))
    throw ParseError("layout JSON needs \"qubits\" and \"plaquettes\"");
  for (const auto& jq : j["qubits"]) {
    QubitDoc q;
    q.id = jq.at("id").get<int>();
    q.col = jq.at("col").get<int>();
    q.row = jq.at("row").get<int>();
    q.kind = jq.at("kind").get<std::string>();
    if (jq.contains("term")) q.term = jq["term"].get<std::vector<int>>();
    doc.qubits.push_back(std::move(q));
  }
  for (const auto& jp : j["plaquettes"]) {
    PlaquetteDoc p;
    p.cell_col = jp.at("cell").at(0).get<int>();
    p.cell_row = jp.at("cell").at(1).get<int>();
    p.shape = jp.at("shape").get<std::string>();
    if (jp.at("group").is_string()) {
      p.filler = true;
      p.group = kFillerGroup;
    } else {
      p.group = jp.at("group").get<int>();
    }
    doc.plaquettes.push_back(std::move(p));
  }
  if (j.contains("pins")) doc.pins = j["pins"].get<std::vector<int>>();
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << contents;
}

}  // namespace parityforge

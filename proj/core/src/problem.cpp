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

#include "parityforge/problem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace parityforge {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<int, int> line_column_of_offset(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string qubits_to_string(const std::vector<int>& qs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? "," : "") << qs[i];
  os << "}";
  return os.str();
}

std::vector<int> read_qubit_set(const json& arr, int num_logical, const char* context) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(std::string("empty or non-array term in ") + context);
  std::vector<int> qs;
  for (const auto& q : arr) {
    if (!q.is_number_integer()) throw ParseError(std::string("non-integer qubit index in ") + context);
    const int idx = q.get<int>();
    if (idx < 1 || idx > num_logical)
      throw ParseError("qubit index " + std::to_string(idx) + " out of range [1," +
                       std::to_string(num_logical) + "] in " + context);
    qs.push_back(idx);
  }
  std::vector<int> sorted = qs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("duplicate index inside a term: " + qubits_to_string(qs));
  return sorted;
}

}  // namespace

std::size_t ProblemSpec::find_term(const std::vector<int>& sorted_qubits) const {
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (terms[j].qubits == sorted_qubits) return j;
  return npos;
}

ProblemSpec parse_problem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, col);
  }

  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  if (!doc.contains("num_logical") || !doc["num_logical"].is_number_integer())
    throw ParseError("missing or non-integer \"num_logical\"");

  ProblemSpec p;
  p.num_logical = doc["num_logical"].get<int>();
  if (p.num_logical < 0) throw ParseError("\"num_logical\" must be non-negative");

  if (doc.contains("terms")) {
    if (!doc["terms"].is_array()) throw ParseError("\"terms\" must be an array");
    for (const auto& t : doc["terms"]) {
      if (!t.is_object() || !t.contains("qubits"))
        throw ParseError("each term needs a \"qubits\" array");
      Term term;
      term.qubits = read_qubit_set(t["qubits"], p.num_logical, "\"terms\"");
      term.coeff = t.value("coeff", 0.0);
      if (p.find_term(term.qubits) != ProblemSpec::npos)
        throw ParseError("duplicate term " + qubits_to_string(term.qubits));
      p.terms.push_back(std::move(term));
    }
  }

  if (doc.contains("side_conditions")) {
    if (!doc["side_conditions"].is_array()) throw ParseError("\"side_conditions\" must be an array");
    for (const auto& sc : doc["side_conditions"]) {
      if (!sc.is_object() || !sc.contains("terms") || !sc["terms"].is_array() ||
          sc["terms"].empty())
        throw ParseError("each side condition needs a non-empty \"terms\" array");
      SideCondition cond;
      for (const auto& t : sc["terms"]) {
        auto qs = read_qubit_set(t, p.num_logical, "\"side_conditions\"");
        std::size_t j = p.find_term(qs);
        if (j == ProblemSpec::npos) {
          // Side-condition-only terms still need parity qubits in the layout.
          p.terms.push_back(Term{qs, 0.0});
          j = p.terms.size() - 1;
        }
        cond.term_indices.push_back(j);
      }
      if (sc.contains("coeffs")) {
        if (!sc["coeffs"].is_array() || sc["coeffs"].size() != cond.term_indices.size())
          throw ParseError("side condition \"coeffs\" must match its \"terms\" length");
        for (const auto& c : sc["coeffs"]) cond.coeffs.push_back(c.get<double>());
      } else {
        cond.coeffs.assign(cond.term_indices.size(), 1.0);
      }
      if (!sc.contains("values") || !sc["values"].is_array() || sc["values"].empty())
        throw ParseError("each side condition needs a non-empty \"values\" array");
      for (const auto& v : sc["values"]) cond.values.push_back(v.get<long long>());
      p.side_conditions.push_back(std::move(cond));
    }
  }

  return p;
}

std::string problem_to_json(const ProblemSpec& p) {
  ordered_json doc;
  doc["num_logical"] = p.num_logical;
  doc["terms"] = ordered_json::array();
  for (const Term& t : p.terms) {
    ordered_json jt;
    jt["qubits"] = t.qubits;
    jt["coeff"] = t.coeff;
    doc["terms"].push_back(jt);
  }
  if (!p.side_conditions.empty()) {
    doc["side_conditions"] = ordered_json::array();
    for (const SideCondition& sc : p.side_conditions) {
      ordered_json jc;
      jc["terms"] = ordered_json::array();
      for (std::size_t j : sc.term_indices) jc["terms"].push_back(p.terms[j].qubits);
      jc["coeffs"] = sc.coeffs;
      jc["values"] = sc.values;
      doc["side_conditions"].push_back(jc);
    }
  }
  return doc.dump(2) + "\n";
}

BitMatrix build_interaction_matrix(const ProblemSpec& p) {
  std::vector<int> labels;
  for (int i = 1; i <= p.num_logical; ++i) labels.push_back(ProblemSpec::logical_label(i));
  for (std::size_t j = 0; j < p.num_terms(); ++j) labels.push_back(p.term_label(j));

  BitMatrix m(std::move(labels));
  const std::size_t n = static_cast<std::size_t>(p.num_logical);
  for (std::size_t j = 0; j < p.num_terms(); ++j) {
    BitVector row(n + p.num_terms());
    for (int q : p.terms[j].qubits) row.set(static_cast<std::size_t>(q - 1));
    row.set(n + j);
    m.add_row(std::move(row));
  }
  return m;
}

ConstraintSpace constraint_space(const ProblemSpec& p) {
  const BitMatrix b = build_interaction_matrix(p);
  std::vector<int> logical;
  for (int i = 1; i <= p.num_logical; ++i) logical.push_back(ProblemSpec::logical_label(i));
  return ConstraintSpace{eliminate_columns(b, logical)};
}

std::size_t logical_rank(const ProblemSpec& p) {
  BitMatrix m = BitMatrix::with_default_labels(static_cast<std::size_t>(p.num_logical));
  for (const Term& t : p.terms) {
    BitVector row(static_cast<std::size_t>(p.num_logical));
    for (int q : t.qubits) row.set(static_cast<std::size_t>(q - 1));
    m.add_row(std::move(row));
  }
  return rank(m);
}

}  // namespace parityforge

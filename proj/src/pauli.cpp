/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xtc/errors.hpp"

namespace xtc {

using nlohmann::json;

char pauli_char(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

PauliOp pauli_op_from_char(char c) {
  switch (c) {
    case 'I': return PauliOp::I;
    case 'X': return PauliOp::X;
    case 'Y': return PauliOp::Y;
    case 'Z': return PauliOp::Z;
    default:
      throw_validation("InvalidCharacter",
                       std::string("not a Pauli operator: '") + c + "'");
  }
}

PauliString::PauliString(std::vector<PauliOp> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw_validation("EmptyString", "Pauli string has no qubits");
}

PauliString PauliString::identity(int num_qubits) {
  if (num_qubits <= 0) throw_validation("EmptyString", "qubit count must be positive");
  return PauliString(std::vector<PauliOp>(static_cast<std::size_t>(num_qubits),
                                          PauliOp::I));
}

int PauliString::weight() const {
  return static_cast<int>(
      std::count_if(ops_.begin(), ops_.end(),
                    [](PauliOp o) { return o != PauliOp::I; }));
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int i = 0; i < num_qubits(); ++i) {
    if (ops_[static_cast<std::size_t>(i)] != PauliOp::I) out.push_back(i);
  }
  return out;
}

std::string PauliString::to_text() const {
  std::string text(ops_.size(), 'I');
  const int n = num_qubits();
  for (int i = 0; i < n; ++i) {
    text[static_cast<std::size_t>(n - 1 - i)] =
        pauli_char(ops_[static_cast<std::size_t>(i)]);
  }
  return text;
}

PauliString parse_pauli(std::string_view text) {
  if (text.empty()) throw_validation("EmptyString", "empty Pauli string");
  const int n = static_cast<int>(text.size());
  std::vector<PauliOp> ops(text.size());
  for (int pos = 0; pos < n; ++pos) {
    char c = text[static_cast<std::size_t>(pos)];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw_validation("InvalidCharacter",
                       "invalid operator '" + std::string(1, c) +
                           "' at position " + std::to_string(pos));
    }
    ops[static_cast<std::size_t>(n - 1 - pos)] = pauli_op_from_char(c);
  }
  return PauliString(std::move(ops));
}

Hamiltonian::Hamiltonian(int num_qubits, std::vector<HamiltonianTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  if (num_qubits_ <= 0)
    throw_validation("SchemaError", "num_qubits must be positive");
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    if (terms_[j].string.num_qubits() != num_qubits_) {
      throw_validation("QubitCountMismatch",
                       "term " + std::to_string(j) + " has " +
                           std::to_string(terms_[j].string.num_qubits()) +
                           " qubits, expected " + std::to_string(num_qubits_));
    }
    if (!std::isfinite(terms_[j].weight)) {
      throw_validation("SchemaError",
                       "term " + std::to_string(j) + " weight is not finite");
    }
  }
}

Ansatz::Ansatz(int num_qubits, std::vector<ParameterGroup> groups,
               std::vector<int> hf_occupations)
    : num_qubits_(num_qubits),
      groups_(std::move(groups)),
      hf_occupations_(std::move(hf_occupations)) {
  if (num_qubits_ <= 0)
    throw_validation("SchemaError", "num_qubits must be positive");
  std::vector<int> seen;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const ParameterGroup& group = groups_[g];
    if (group.terms.empty()) {
      throw_validation("SchemaError",
                       "group " + std::to_string(g) + " has no terms");
    }
    if (std::find(seen.begin(), seen.end(), group.param_id) != seen.end()) {
      throw_validation("SchemaError", "duplicate param_id " +
                                          std::to_string(group.param_id));
    }
    seen.push_back(group.param_id);
    for (const GroupTerm& term : group.terms) {
      if (term.string.num_qubits() != num_qubits_) {
        throw_validation("QubitCountMismatch",
                         "group " + std::to_string(g) + " string has " +
                             std::to_string(term.string.num_qubits()) +
                             " qubits, expected " + std::to_string(num_qubits_));
      }
    }
  }
  for (int q : hf_occupations_) {
    if (q < 0 || q >= num_qubits_) {
      throw_validation("SchemaError",
                       "hf occupation " + std::to_string(q) + " out of range");
    }
  }
}

std::vector<PauliString> ansatz_strings(const Ansatz& ansatz) {
  std::vector<PauliString> out;
  for (const ParameterGroup& g : ansatz.groups()) {
    for (const GroupTerm& t : g.terms) out.push_back(t.string);
  }
  return out;
}

namespace {

json parse_json_or_throw(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw_validation("SchemaError", std::string("invalid JSON in ") + what);
  }
  return doc;
}

const json& require_field(const json& obj, const char* key,
                          const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw_validation("SchemaError", "missing field " + path + "." + key);
  }
  return obj.at(key);
}

int require_int(const json& obj, const char* key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_number_integer()) {
    throw_validation("SchemaError", path + "." + key + " must be an integer");
  }
  return v.get<int>();
}

double require_number(const json& obj, const char* key,
                      const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_number()) {
    throw_validation("SchemaError", path + "." + key + " must be a number");
  }
  return v.get<double>();
}

std::string require_string(const json& obj, const char* key,
                           const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_string()) {
    throw_validation("SchemaError", path + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw_validation("SchemaError", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw_validation("SchemaError", "cannot write " + path.string());
  }
  out << text;
}

}  // namespace

Hamiltonian hamiltonian_from_json_text(const std::string& text) {
  json doc = parse_json_or_throw(text, "hamiltonian");
  int n = require_int(doc, "num_qubits", "$");
  const json& terms = require_field(doc, "terms", "$");
  if (!terms.is_array())
    throw_validation("SchemaError", "$.terms must be an array");
  std::vector<HamiltonianTerm> out;
  out.reserve(terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    std::string path = "$.terms[" + std::to_string(j) + "]";
    PauliString p = parse_pauli(require_string(terms[j], "pauli", path));
    double w = require_number(terms[j], "weight", path);
    if (p.num_qubits() != n) {
      throw_validation("QubitCountMismatch",
                       path + ".pauli has " + std::to_string(p.num_qubits()) +
                           " qubits, expected " + std::to_string(n));
    }
    out.push_back({std::move(p), w});
  }
  return Hamiltonian(n, std::move(out));
}

std::string hamiltonian_to_json_text(const Hamiltonian& h) {
  json terms = json::array();
  for (const HamiltonianTerm& t : h.terms()) {
    terms.push_back({{"pauli", t.string.to_text()}, {"weight", t.weight}});
  }
  json doc{{"num_qubits", h.num_qubits()}, {"terms", std::move(terms)}};
  return doc.dump(2) + "\n";
}

Hamiltonian load_hamiltonian(const std::filesystem::path& path) {
  return hamiltonian_from_json_text(read_file(path));
}

void save_hamiltonian(const Hamiltonian& h, const std::filesystem::path& path) {
  write_file(path, hamiltonian_to_json_text(h));
}

Ansatz ansatz_from_json_text(const std::string& text) {
  json doc = parse_json_or_throw(text, "ansatz");
  int n = require_int(doc, "num_qubits", "$");
  const json& occ = require_field(doc, "hf_occupations", "$");
  if (!occ.is_array())
    throw_validation("SchemaError", "$.hf_occupations must be an array");
  std::vector<int> occupations;
  for (const json& v : occ) {
    if (!v.is_number_integer())
      throw_validation("SchemaError", "$.hf_occupations must hold integers");
    occupations.push_back(v.get<int>());
  }
  const json& groups = require_field(doc, "groups", "$");
  if (!groups.is_array())
    throw_validation("SchemaError", "$.groups must be an array");
  std::vector<ParameterGroup> out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::string gpath = "$.groups[" + std::to_string(g) + "]";
    ParameterGroup group;
    group.param_id = require_int(groups[g], "param_id", gpath);
    const json& terms = require_field(groups[g], "terms", gpath);
    if (!terms.is_array())
      throw_validation("SchemaError", gpath + ".terms must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      std::string tpath = gpath + ".terms[" + std::to_string(t) + "]";
      PauliString p = parse_pauli(require_string(terms[t], "pauli", tpath));
      if (p.num_qubits() != n) {
        throw_validation("QubitCountMismatch",
                         tpath + ".pauli has " +
                             std::to_string(p.num_qubits()) +
                             " qubits, expected " + std::to_string(n));
      }
      group.terms.push_back({std::move(p), require_number(terms[t], "coeff", tpath)});
    }
    out.push_back(std::move(group));
  }
  return Ansatz(n, std::move(out), std::move(occupations));
}

std::string ansatz_to_json_text(const Ansatz& a) {
  json groups = json::array();
  for (const ParameterGroup& g : a.groups()) {
    json terms = json::array();
    for (const GroupTerm& t : g.terms) {
      terms.push_back({{"pauli", t.string.to_text()}, {"coeff", t.coeff}});
    }
    groups.push_back({{"param_id", g.param_id}, {"terms", std::move(terms)}});
  }
  json doc{{"num_qubits", a.num_qubits()},
           {"hf_occupations", a.hf_occupations()},
           {"groups", std::move(groups)}};
  return doc.dump(2) + "\n";
}

Ansatz load_ansatz(const std::filesystem::path& path) {
  return ansatz_from_json_text(read_file(path));
}

void save_ansatz(const Ansatz& a, const std::filesystem::path& path) {
  write_file(path, ansatz_to_json_text(a));
}

}  // namespace xtc

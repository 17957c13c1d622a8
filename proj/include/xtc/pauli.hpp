/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace xtc {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliOp op);
PauliOp pauli_op_from_char(char c);  // throws InvalidCharacter

/**
 * An n-qubit Pauli string: one operator from {I, X, Y, Z} per qubit.
 *
 * Internally indexed by qubit (ops()[i] acts on qubit i). The textual form
 * is written highest qubit first, i.e. text[0] acts on qubit n-1, so
 * parse_pauli("XIYZ") has X on qubit 3 and Z on qubit 0.
 *
 * Immutable after construction.
 */
class PauliString {
 public:
  explicit PauliString(std::vector<PauliOp> ops);
  static PauliString identity(int num_qubits);

  int num_qubits() const { return static_cast<int>(ops_.size()); }
  PauliOp op(int qubit) const { return ops_[static_cast<std::size_t>(qubit)]; }
  const std::vector<PauliOp>& ops() const { return ops_; }

  /// Number of non-identity operators.
  int weight() const;
  /// Qubits carrying non-identity operators, ascending.
  std::vector<int> support() const;
  bool is_identity() const { return weight() == 0; }

  std::string to_text() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<PauliOp> ops_;
};

/// Parse the textual form (leftmost character = highest qubit index).
/// Throws EmptyString / InvalidCharacter.
PauliString parse_pauli(std::string_view text);

struct HamiltonianTerm {
  PauliString string;
  double weight;  // Hartree contribution
};

/// Weighted sum of Pauli strings, H = sum_j w_j P_j. Term order is
/// preserved through load/save. Immutable after construction.
class Hamiltonian {
 public:
  Hamiltonian(int num_qubits, std::vector<HamiltonianTerm> terms);

  int num_qubits() const { return num_qubits_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

 private:
  int num_qubits_;
  std::vector<HamiltonianTerm> terms_;
};

struct GroupTerm {
  PauliString string;
  double coeff;
};

/// The Pauli strings sharing one variational parameter. A bound group
/// contributes the product over terms of exp(-i * value * coeff * P).
struct ParameterGroup {
  int param_id = 0;
  std::vector<GroupTerm> terms;
};

/// Ordered sequence of parameter groups plus the Hartree-Fock occupations
/// (qubits that receive an X gate before the ansatz body).
class Ansatz {
 public:
  Ansatz(int num_qubits, std::vector<ParameterGroup> groups,
         std::vector<int> hf_occupations);

  int num_qubits() const { return num_qubits_; }
  const std::vector<ParameterGroup>& groups() const { return groups_; }
  const std::vector<int>& hf_occupations() const { return hf_occupations_; }
  int num_parameters() const { return static_cast<int>(groups_.size()); }

 private:
  int num_qubits_;
  std::vector<ParameterGroup> groups_;
  std::vector<int> hf_occupations_;
};

/// All strings of an ansatz in execution order (groups in order, terms in
/// group order).
std::vector<PauliString> ansatz_strings(const Ansatz& ansatz);

// --- JSON I/O ---------------------------------------------------------
//
// Hamiltonian: {"num_qubits": n, "terms": [{"pauli": "...", "weight": w}]}
// Ansatz:      {"num_qubits": n, "hf_occupations": [...],
//               "groups": [{"param_id": k,
//                           "terms": [{"pauli": "...", "coeff": c}]}]}
//
// Loaders throw SchemaError (with a field path) or QubitCountMismatch.

Hamiltonian load_hamiltonian(const std::filesystem::path& path);
void save_hamiltonian(const Hamiltonian& h, const std::filesystem::path& path);
Hamiltonian hamiltonian_from_json_text(const std::string& text);
std::string hamiltonian_to_json_text(const Hamiltonian& h);

Ansatz load_ansatz(const std::filesystem::path& path);
void save_ansatz(const Ansatz& a, const std::filesystem::path& path);
Ansatz ansatz_from_json_text(const std::string& text);
std::string ansatz_to_json_text(const Ansatz& a);

}  // namespace xtc

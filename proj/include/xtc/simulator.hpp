/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "xtc/circuit.hpp"
#include "xtc/pauli.hpp"

namespace xtc {

/// Dense matrix over the full Hilbert space; oracle substrate for tests and
/// the exact eigensolver.
using DenseOperator = Eigen::MatrixXcd;

/// Qubit i is bit i of the basis index (little-endian), matching the IR's
/// string order: |q_{n-1} ... q_1 q_0>.
class StateVector {
 public:
  /// |00...0>
  static StateVector zero_state(int num_qubits);
  /// Computational basis state with the given index.
  static StateVector basis_state(int num_qubits, std::size_t index);
  explicit StateVector(std::vector<std::complex<double>> amplitudes);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }
  double norm() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Hard cap for statevector simulation (memory guard).
inline constexpr int kMaxSimQubits = 24;
/// Hard cap for dense unitary extraction.
inline constexpr int kMaxUnitaryQubits = 10;
/// Hard cap for the dense eigensolver.
inline constexpr int kMaxDenseQubits = 12;

StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// Exact <psi|P|psi>, no sampling.
double expectation(const StateVector& state, const PauliString& p);

/// E = sum_i w_i <psi|P_i|psi>.
double energy(const StateVector& state, const Hamiltonian& h);

DenseOperator circuit_unitary(const Circuit& circuit);

/// Dense Hermitian build of a Hamiltonian.
DenseOperator dense_hamiltonian(const Hamiltonian& h);

/// Dense matrix of a single Pauli string.
DenseOperator dense_pauli(const PauliString& p);

/// True iff max_ij |U_ij - e^{i phi} V_ij| <= tol for the phase aligning
/// the largest-magnitude entry of V.
bool equivalent_up_to_phase(const DenseOperator& u, const DenseOperator& v,
                            double tol);

/// Minimum eigenvalue of the dense Hermitian build (standard symmetric
/// eigensolver).
double exact_ground_energy(const Hamiltonian& h);

}  // namespace xtc

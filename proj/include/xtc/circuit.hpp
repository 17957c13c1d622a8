/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <string>
#include <vector>

namespace xtc {

enum class GateKind : int { X = 0, H = 1, RX = 2, RZ = 3, CNOT = 4, SWAP = 5 };

inline constexpr int kNumGateKinds = 6;

const char* gate_name(GateKind kind);

/// One gate. q1 is -1 for single-qubit gates; angle is meaningful for
/// RX / RZ only (radians).
struct Gate {
  GateKind kind;
  int q0;
  int q1 = -1;
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate rx(int q, double angle) { return {GateKind::RX, q, -1, angle}; }
  static Gate rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
  static Gate cnot(int control, int target) {
    return {GateKind::CNOT, control, target};
  }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b}; }

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::SWAP;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed qubit count; counts are always
/// recomputed from the list.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  void append(const Gate& gate);  // validates qubit indices
  void append(const Circuit& other);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  int count(GateKind kind) const;
  std::array<int, kNumGateKinds> counts() const;
  /// CNOT count with every SWAP expanded to 3 CNOTs.
  long cnot_count_expanded() const;
  long total_gates() const { return static_cast<long>(gates_.size()); }

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// OpenQASM 2.0 text (gates h, rx, rz, x, cx; SWAP expanded to 3 cx).
std::string emit_qasm(const Circuit& circuit);

/// Reader for the subset emit_qasm produces.
Circuit parse_qasm(const std::string& text);

}  // namespace xtc

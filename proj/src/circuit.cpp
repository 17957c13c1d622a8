/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/circuit.hpp"

#include <cmath>

#include "xtc/errors.hpp"

namespace xtc {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits <= 0)
    throw_validation("QubitRange", "circuit needs at least one qubit");
}

void Circuit::append(const Gate& gate) {
  auto check = [&](int q) {
    if (q < 0 || q >= num_qubits_) {
      throw_validation("QubitRange", "qubit " + std::to_string(q) +
                                         " out of range [0, " +
                                         std::to_string(num_qubits_) + ")");
    }
  };
  check(gate.q0);
  if (gate.is_two_qubit()) {
    check(gate.q1);
    if (gate.q0 == gate.q1) {
      throw_validation("QubitRange", "two-qubit gate on identical qubits");
    }
  }
  if ((gate.kind == GateKind::RX || gate.kind == GateKind::RZ) &&
      !std::isfinite(gate.angle)) {
    throw_validation("QubitRange", "rotation angle is not finite");
  }
  gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  for (const Gate& g : other.gates()) append(g);
}

int Circuit::count(GateKind kind) const {
  int n = 0;
  for (const Gate& g : gates_) {
    if (g.kind == kind) ++n;
  }
  return n;
}

std::array<int, kNumGateKinds> Circuit::counts() const {
  std::array<int, kNumGateKinds> out{};
  for (const Gate& g : gates_) out[static_cast<int>(g.kind)]++;
  return out;
}

long Circuit::cnot_count_expanded() const {
  return count(GateKind::CNOT) + 3L * count(GateKind::SWAP);
}

}  // namespace xtc

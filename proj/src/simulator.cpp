/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/simulator.hpp"

#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "xtc/errors.hpp"

namespace xtc {

namespace {

using cd = std::complex<double>;

void check_sim_size(int num_qubits) {
  if (num_qubits > kMaxSimQubits) {
    throw_size_limit("SizeLimit",
                     "statevector limited to " +
                         std::to_string(kMaxSimQubits) + " qubits, got " +
                         std::to_string(num_qubits));
  }
}

}  // namespace

StateVector StateVector::zero_state(int num_qubits) {
  return basis_state(num_qubits, 0);
}

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
  if (num_qubits <= 0) throw_validation("QubitRange", "need at least one qubit");
  check_sim_size(num_qubits);
  std::vector<cd> amps(std::size_t{1} << num_qubits, cd{0.0, 0.0});
  amps.at(index) = cd{1.0, 0.0};
  return StateVector(std::move(amps));
}

StateVector::StateVector(std::vector<cd> amplitudes)
    : amps_(std::move(amplitudes)) {
  std::size_t dim = amps_.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw_validation("QubitRange", "amplitude count must be a power of two");
  }
  num_qubits_ = 0;
  while ((std::size_t{1} << num_qubits_) < dim) ++num_qubits_;
  check_sim_size(num_qubits_);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cd& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply(const Gate& gate) {
  auto check = [&](int q) {
    if (q < 0 || q >= num_qubits_)
      throw_validation("QubitRange", "gate qubit out of range");
  };
  check(gate.q0);
  if (gate.is_two_qubit()) check(gate.q1);

  const std::size_t dim = amps_.size();
  const std::size_t m0 = std::size_t{1} << gate.q0;

  switch (gate.kind) {
    case GateKind::X: {
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & m0) == 0) std::swap(amps_[b], amps_[b | m0]);
      }
      break;
    }
    case GateKind::H: {
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & m0) == 0) {
          cd a0 = amps_[b];
          cd a1 = amps_[b | m0];
          amps_[b] = (a0 + a1) * inv_sqrt2;
          amps_[b | m0] = (a0 - a1) * inv_sqrt2;
        }
      }
      break;
    }
    case GateKind::RX: {
      const double c = std::cos(gate.angle / 2);
      const double s = std::sin(gate.angle / 2);
      const cd mis{0.0, -s};
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & m0) == 0) {
          cd a0 = amps_[b];
          cd a1 = amps_[b | m0];
          amps_[b] = c * a0 + mis * a1;
          amps_[b | m0] = mis * a0 + c * a1;
        }
      }
      break;
    }
    case GateKind::RZ: {
      const cd lo = std::polar(1.0, -gate.angle / 2);
      const cd hi = std::polar(1.0, gate.angle / 2);
      for (std::size_t b = 0; b < dim; ++b) {
        amps_[b] *= (b & m0) ? hi : lo;
      }
      break;
    }
    case GateKind::CNOT: {
      const std::size_t mt = std::size_t{1} << gate.q1;
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & m0) && !(b & mt)) std::swap(amps_[b], amps_[b | mt]);
      }
      break;
    }
    case GateKind::SWAP: {
      const std::size_t ma = m0;
      const std::size_t mb = std::size_t{1} << gate.q1;
      for (std::size_t b = 0; b < dim; ++b) {
        if ((b & ma) && !(b & mb)) std::swap(amps_[b], amps_[(b ^ ma) | mb]);
      }
      break;
    }
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw_validation("SizeMismatch", "circuit has " +
                                         std::to_string(circuit.num_qubits()) +
                                         " qubits, state has " +
                                         std::to_string(num_qubits_));
  }
  for (const Gate& g : circuit.gates()) apply(g);
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  StateVector out = state;
  out.apply(circuit);
  return out;
}

double expectation(const StateVector& state, const PauliString& p) {
  if (p.num_qubits() != state.num_qubits()) {
    throw_validation("SizeMismatch", "Pauli string has " +
                                         std::to_string(p.num_qubits()) +
                                         " qubits, state has " +
                                         std::to_string(state.num_qubits()));
  }
  const auto& amps = state.amplitudes();
  const std::size_t dim = amps.size();

  std::size_t flip_mask = 0;  // X and Y flip the bit
  std::size_t y_mask = 0;
  std::size_t z_mask = 0;
  for (int q = 0; q < p.num_qubits(); ++q) {
    switch (p.op(q)) {
      case PauliOp::I: break;
      case PauliOp::X: flip_mask |= std::size_t{1} << q; break;
      case PauliOp::Y:
        flip_mask |= std::size_t{1} << q;
        y_mask |= std::size_t{1} << q;
        break;
      case PauliOp::Z: z_mask |= std::size_t{1} << q; break;
    }
  }
  const int num_y = static_cast<int>(std::popcount(y_mask));

  // P|b> = phase(b) |b ^ flip_mask>, phase(b) = i^{num_y} * (-1)^{|b & (y|z)|}
  cd base_phase{1.0, 0.0};
  switch (num_y % 4) {
    case 0: base_phase = {1.0, 0.0}; break;
    case 1: base_phase = {0.0, 1.0}; break;
    case 2: base_phase = {-1.0, 0.0}; break;
    case 3: base_phase = {0.0, -1.0}; break;
  }
  const std::size_t sign_mask = y_mask | z_mask;

  cd acc{0.0, 0.0};
  for (std::size_t b = 0; b < dim; ++b) {
    cd term = base_phase * amps[b];
    if (std::popcount(b & sign_mask) & 1) term = -term;
    acc += std::conj(amps[b ^ flip_mask]) * term;
  }
  return acc.real();
}

double energy(const StateVector& state, const Hamiltonian& h) {
  if (h.num_qubits() != state.num_qubits()) {
    throw_validation("SizeMismatch", "Hamiltonian has " +
                                         std::to_string(h.num_qubits()) +
                                         " qubits, state has " +
                                         std::to_string(state.num_qubits()));
  }
  double e = 0.0;
  for (const HamiltonianTerm& t : h.terms()) {
    e += t.weight * expectation(state, t.string);
  }
  return e;
}

DenseOperator circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits() > kMaxUnitaryQubits) {
    throw_size_limit("SizeLimit",
                     "unitary extraction limited to " +
                         std::to_string(kMaxUnitaryQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  DenseOperator u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis_state(circuit.num_qubits(), col);
    s.apply(circuit);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          s.amplitudes()[row];
    }
  }
  return u;
}

DenseOperator dense_pauli(const PauliString& p) {
  if (p.num_qubits() > kMaxDenseQubits) {
    throw_size_limit("SizeLimit", "dense build limited to " +
                                      std::to_string(kMaxDenseQubits) +
                                      " qubits");
  }
  const std::size_t dim = std::size_t{1} << p.num_qubits();
  std::size_t flip_mask = 0, y_mask = 0, z_mask = 0;
  for (int q = 0; q < p.num_qubits(); ++q) {
    switch (p.op(q)) {
      case PauliOp::I: break;
      case PauliOp::X: flip_mask |= std::size_t{1} << q; break;
      case PauliOp::Y:
        flip_mask |= std::size_t{1} << q;
        y_mask |= std::size_t{1} << q;
        break;
      case PauliOp::Z: z_mask |= std::size_t{1} << q; break;
    }
  }
  const int num_y = static_cast<int>(std::popcount(y_mask));
  cd base_phase{1.0, 0.0};
  switch (num_y % 4) {
    case 0: base_phase = {1.0, 0.0}; break;
    case 1: base_phase = {0.0, 1.0}; break;
    case 2: base_phase = {-1.0, 0.0}; break;
    case 3: base_phase = {0.0, -1.0}; break;
  }
  const std::size_t sign_mask = y_mask | z_mask;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    cd phase = base_phase;
    if (std::popcount(b & sign_mask) & 1) phase = -phase;
    m(static_cast<Eigen::Index>(b ^ flip_mask), static_cast<Eigen::Index>(b)) =
        phase;
  }
  return m;
}

DenseOperator dense_hamiltonian(const Hamiltonian& h) {
  if (h.num_qubits() > kMaxDenseQubits) {
    throw_size_limit("SizeLimit", "dense build limited to " +
                                      std::to_string(kMaxDenseQubits) +
                                      " qubits");
  }
  const std::size_t dim = std::size_t{1} << h.num_qubits();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const HamiltonianTerm& t : h.terms()) {
    m += t.weight * dense_pauli(t.string);
  }
  return m;
}

bool equivalent_up_to_phase(const DenseOperator& u, const DenseOperator& v,
                            double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  // align on the largest-magnitude entry of v
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      double mag = std::abs(v(i, j));
      if (mag > best) {
        best = mag;
        bi = i;
        bj = j;
      }
    }
  }
  if (best < 1e-14 || std::abs(u(bi, bj)) < 1e-14) {
    return u.cwiseAbs().maxCoeff() <= tol && v.cwiseAbs().maxCoeff() <= tol;
  }
  cd phase = u(bi, bj) / v(bi, bj);
  phase /= std::abs(phase);
  return (u - phase * v).cwiseAbs().maxCoeff() <= tol;
}

double exact_ground_energy(const Hamiltonian& h) {
  if (h.num_qubits() > kMaxDenseQubits) {
    throw_size_limit("SizeLimit", "exact eigensolver limited to " +
                                      std::to_string(kMaxDenseQubits) +
                                      " qubits");
  }
  DenseOperator m = dense_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace xtc

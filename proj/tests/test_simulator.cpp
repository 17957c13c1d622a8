/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "xtc/errors.hpp"
#include "xtc/simulator.hpp"
#include "xtc/synthesis.hpp"

using namespace xtc;
using xtc::testing::exp_minus_i_theta;

TEST_CASE("X on qubit 0 maps |00> to |01>") {
  StateVector s = StateVector::zero_state(2);
  s.apply(Gate::x(0));
  CHECK(std::abs(s.amplitudes()[1] - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("RZ is measurement-invariant in the Z basis") {
  StateVector s = StateVector::zero_state(1);
  s.apply(Gate::rz(0, 1.234));
  CHECK(std::abs(std::abs(s.amplitudes()[0]) - 1.0) < 1e-15);
  CHECK(expectation(s, parse_pauli("Z")) == doctest::Approx(1.0));
}

TEST_CASE("synthesized exp(-i theta ZZ) matches the matrix exponential") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    double theta = rng.uniform(-2.0, 2.0);
    PauliString zz = parse_pauli("ZZ");
    Circuit c = synthesize_chain(zz, theta);
    StateVector in = testing::random_state(rng, 2);
    StateVector out = apply_circuit(in, c);
    DenseOperator u = exp_minus_i_theta(dense_pauli(zz), theta);
    Eigen::VectorXcd v(4);
    for (int i = 0; i < 4; ++i) v(i) = in.amplitudes()[static_cast<std::size_t>(i)];
    Eigen::VectorXcd expect = u * v;
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(expect(i) - out.amplitudes()[static_cast<std::size_t>(i)]) <
            1e-10);
    }
  }
}

TEST_CASE("norm is preserved by every gate kind") {
  Rng rng(11);
  StateVector s = testing::random_state(rng, 3);
  for (const Gate& g : {Gate::x(0), Gate::h(1), Gate::rx(2, 0.3),
                        Gate::rz(0, -1.1), Gate::cnot(0, 2), Gate::swap(1, 2)}) {
    s.apply(g);
    CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("expectation basics") {
  StateVector zero = StateVector::zero_state(1);
  CHECK(expectation(zero, parse_pauli("Z")) == doctest::Approx(1.0));
  StateVector plus = StateVector::zero_state(1);
  plus.apply(Gate::h(0));
  CHECK(expectation(plus, parse_pauli("Z")) == doctest::Approx(0.0));
  CHECK(expectation(plus, parse_pauli("X")) == doctest::Approx(1.0));
}

TEST_CASE("expectation matches the dense quadratic form") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    StateVector s = testing::random_state(rng, 4);
    PauliString p = testing::random_pauli(rng, 4);
    DenseOperator m = dense_pauli(p);
    Eigen::VectorXcd v(16);
    for (int i = 0; i < 16; ++i) v(i) = s.amplitudes()[static_cast<std::size_t>(i)];
    double expected = std::real(v.dot(m * v));
    CHECK(expectation(s, p) == doctest::Approx(expected).epsilon(1e-12));
  }
  // the named example
  StateVector s = testing::random_state(rng, 4);
  PauliString p = parse_pauli("XZIY");
  Eigen::VectorXcd v(16);
  for (int i = 0; i < 16; ++i) v(i) = s.amplitudes()[static_cast<std::size_t>(i)];
  CHECK(expectation(s, p) ==
        doctest::Approx(std::real(v.dot(dense_pauli(p) * v))).epsilon(1e-12));
}

TEST_CASE("energy is the weighted sum of expectations") {
  StateVector zero = StateVector::zero_state(1);
  Hamiltonian hz(1, {{parse_pauli("Z"), 1.0}});
  CHECK(energy(zero, hz) == doctest::Approx(1.0));

  Hamiltonian hid(3, {{parse_pauli("III"), 0.7}});
  Rng rng(17);
  StateVector s = testing::random_state(rng, 3);
  CHECK(energy(s, hid) == doctest::Approx(0.7));

  Hamiltonian h = testing::random_hamiltonian(rng, 3, 6);
  DenseOperator m = dense_hamiltonian(h);
  Eigen::VectorXcd v(8);
  for (int i = 0; i < 8; ++i) v(i) = s.amplitudes()[static_cast<std::size_t>(i)];
  CHECK(energy(s, h) == doctest::Approx(std::real(v.dot(m * v))).epsilon(1e-12));

  // linearity in the weights
  std::vector<HamiltonianTerm> scaled = h.terms();
  for (auto& t : scaled) t.weight *= 3.5;
  CHECK(energy(s, Hamiltonian(3, scaled)) ==
        doctest::Approx(3.5 * energy(s, h)).epsilon(1e-12));
}

TEST_CASE("circuit_unitary output is unitary") {
  Rng rng(19);
  PauliString p = testing::random_pauli(rng, 4, 2);
  Circuit c = synthesize_chain(p, 0.77);
  DenseOperator u = circuit_unitary(c);
  DenseOperator should_be_id = u.adjoint() * u;
  CHECK((should_be_id - DenseOperator::Identity(16, 16)).cwiseAbs().maxCoeff() <
        1e-9);
}

TEST_CASE("equivalent_up_to_phase") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  DenseOperator u = circuit_unitary(c);
  DenseOperator v = std::polar(1.0, std::numbers::pi / 7) * u;
  CHECK(equivalent_up_to_phase(u, v, 1e-9));

  Circuit c1(1), c2(1);
  c1.append(Gate::rz(0, 0.4));
  c2.append(Gate::rz(0, 0.5));
  CHECK(!equivalent_up_to_phase(circuit_unitary(c1), circuit_unitary(c2), 1e-9));
}

TEST_CASE("exact_ground_energy on hand-built cases") {
  CHECK(exact_ground_energy(Hamiltonian(1, {{parse_pauli("Z"), 1.0}})) ==
        doctest::Approx(-1.0));
  CHECK(exact_ground_energy(Hamiltonian(1, {{parse_pauli("X"), 1.0}})) ==
        doctest::Approx(-1.0));

  // 0.5 ZZ + 0.3 XI, cross-checked by an independent second eigensolver
  Hamiltonian h(2, {{parse_pauli("ZZ"), 0.5}, {parse_pauli("XI"), 0.3}});
  double ground = exact_ground_energy(h);
  double oracle = testing::power_method_ground_energy(dense_hamiltonian(h));
  CHECK(ground == doctest::Approx(oracle).epsilon(1e-9));
  // eigenvalues of the explicit 4x4: +-(0.5) shifted by the X on qubit 1
  // block-diagonalizes to eigenvalues +-sqrt(0.25 + 0.09)
  CHECK(ground == doctest::Approx(-std::sqrt(0.25 + 0.09)));
}

TEST_CASE("variational principle holds on random states") {
  Rng rng(23);
  Hamiltonian h = testing::random_hamiltonian(rng, 3, 8);
  double ground = exact_ground_energy(h);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = testing::random_state(rng, 3);
    CHECK(energy(s, h) >= ground - 1e-9);
  }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(StateVector::zero_state(25), Error);
  Hamiltonian h(13, {{PauliString::identity(13), 1.0}});
  try {
    exact_ground_energy(h);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

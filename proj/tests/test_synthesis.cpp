/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "xtc/errors.hpp"
#include "xtc/simulator.hpp"
#include "xtc/synthesis.hpp"
#include "xtc/uccsd.hpp"

using namespace xtc;
using xtc::testing::exp_minus_i_theta;

TEST_CASE("chain tree of XIYZ") {
  CnotTree tree = chain_tree(parse_pauli("XIYZ"));
  CHECK(tree.nodes() == std::vector<int>{0, 1, 3});
  CHECK(tree.root() == 3);
  CHECK(tree.parent(0) == 1);
  CHECK(tree.parent(1) == 3);
  CHECK(tree.parent(3) == -1);
  // leaves-to-root emission order
  REQUIRE(tree.edges_leaves_first().size() == 2);
  CHECK(tree.edges_leaves_first()[0] == std::pair<int, int>{0, 1});
  CHECK(tree.edges_leaves_first()[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("single-qubit and empty supports") {
  CnotTree trivial = chain_tree(parse_pauli("Z"));
  CHECK(trivial.nodes() == std::vector<int>{0});
  CHECK(trivial.edges_leaves_first().empty());
  try {
    chain_tree(parse_pauli("IIII"));
    FAIL("expected EmptySupport");
  } catch (const Error& e) {
    CHECK(e.code() == "EmptySupport");
  }
}

TEST_CASE("XIYZ chain synthesis gate counts") {
  Circuit c = synthesize_chain(parse_pauli("XIYZ"), 0.4);
  CHECK(c.count(GateKind::H) == 2);    // X basis, both sides
  CHECK(c.count(GateKind::RX) == 2);   // Y basis, both sides
  CHECK(c.count(GateKind::CNOT) == 4); // 2(w-1)
  CHECK(c.count(GateKind::RZ) == 1);
  CHECK(c.total_gates() == 9);
}

TEST_CASE("weight-1 string synthesizes to a bare rotation") {
  Circuit c = synthesize_chain(parse_pauli("Z"), 0.9);
  REQUIRE(c.size() == 1);
  CHECK(c.gates()[0].kind == GateKind::RZ);
  CHECK(c.gates()[0].angle == doctest::Approx(1.8));  // RZ(2 theta)
}

TEST_CASE("circuit unitary equals exp(-i theta P) for the chain tree") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.bounded(4));
    PauliString p = testing::random_pauli(rng, n, 1);
    double theta = rng.uniform(-2.0, 2.0);
    DenseOperator expected = exp_minus_i_theta(dense_pauli(p), theta);
    DenseOperator actual = circuit_unitary(synthesize_chain(p, theta));
    CHECK(equivalent_up_to_phase(actual, expected, 1e-9));
    // the construction is exact, not just phase-equivalent
    CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("tree invariance: every spanning tree gives the same unitary") {
  Rng rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.bounded(5));
    PauliString p = testing::random_pauli(rng, n, 1);
    double theta = rng.uniform(-2.0, 2.0);
    CnotTree tree = testing::random_spanning_tree(rng, p);
    DenseOperator expected = exp_minus_i_theta(dense_pauli(p), theta);
    DenseOperator actual = circuit_unitary(synthesize(p, theta, tree));
    CHECK(equivalent_up_to_phase(actual, expected, 1e-9));
  }
}

TEST_CASE("ZZZZ synthesis variants are equivalent") {
  PauliString zzzz = parse_pauli("ZZZZ");
  double theta = 0.613;
  Circuit chain = synthesize(zzzz, theta, chain_tree(zzzz));
  Circuit star = synthesize(zzzz, theta, star_tree(zzzz, 2));
  // balanced tree: 0 -> 1, 1 -> 2 <- 3
  CnotTree balanced({0, 1, 2, 3}, {1, 2, -1, 2}, 2);
  Circuit third = synthesize(zzzz, theta, balanced);
  DenseOperator u1 = circuit_unitary(chain);
  DenseOperator u2 = circuit_unitary(star);
  DenseOperator u3 = circuit_unitary(third);
  CHECK(equivalent_up_to_phase(u1, u2, 1e-9));
  CHECK(equivalent_up_to_phase(u2, u3, 1e-9));
  CHECK(equivalent_up_to_phase(u1, u3, 1e-9));
  CHECK(equivalent_up_to_phase(u1, exp_minus_i_theta(dense_pauli(zzzz), theta),
                               1e-9));
}

TEST_CASE("theta = 0 yields the identity") {
  Rng rng(41);
  PauliString p = testing::random_pauli(rng, 4, 2);
  DenseOperator u = circuit_unitary(synthesize_chain(p, 0.0));
  CHECK(equivalent_up_to_phase(u, DenseOperator::Identity(16, 16), 1e-12));
}

TEST_CASE("per-string gate count identities") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.bounded(8));
    PauliString p = testing::random_pauli(rng, n, 1);
    Circuit c = synthesize_chain(p, 0.3);
    int w = p.weight();
    int xy = 0;
    for (int q = 0; q < n; ++q) {
      if (p.op(q) == PauliOp::X || p.op(q) == PauliOp::Y) ++xy;
    }
    CHECK(c.count(GateKind::CNOT) == 2 * (w - 1));
    CHECK(c.total_gates() == 2 * xy + 2 * (w - 1) + 1);
  }
}

TEST_CASE("tree/support mismatch is rejected") {
  PauliString p = parse_pauli("XXI");
  CnotTree wrong = chain_tree(parse_pauli("XIX"));
  CHECK_THROWS_AS(synthesize(p, 0.1, wrong), Error);
}

TEST_CASE("full-ansatz circuit equals the ordered product of exponentials") {
  ActiveSpace space{4, 2};
  Ansatz ansatz = generate_uccsd(space);
  Rng rng(47);
  std::vector<double> values;
  for (int g = 0; g < ansatz.num_parameters(); ++g) {
    values.push_back(rng.uniform(-1.0, 1.0));
  }
  Circuit circuit = synthesize_ansatz_baseline(ansatz, values);

  const std::size_t dim = 16;
  DenseOperator expected = DenseOperator::Identity(dim, dim);
  // HF X gates first
  Circuit prep(4);
  for (int q : ansatz.hf_occupations()) prep.append(Gate::x(q));
  expected = circuit_unitary(prep) * expected;
  for (std::size_t g = 0; g < ansatz.groups().size(); ++g) {
    for (const GroupTerm& term : ansatz.groups()[g].terms) {
      expected = exp_minus_i_theta(dense_pauli(term.string),
                                   values[g] * term.coeff) *
                 expected;
    }
  }
  CHECK(equivalent_up_to_phase(circuit_unitary(circuit), expected, 1e-9));
}

TEST_CASE("empty ansatz synthesizes to the HF preparation only") {
  Ansatz bare(4, {}, {0, 2});
  Circuit c = synthesize_ansatz_baseline(bare, std::vector<double>{});
  CHECK(c.total_gates() == 2);
  CHECK(c.count(GateKind::X) == 2);
}

TEST_CASE("benchmark totals for the two smallest spaces") {
  Ansatz h2 = generate_uccsd(ActiveSpace{4, 2});
  Circuit h2_circuit = synthesize_ansatz_baseline(h2, 1.0);
  CHECK(h2_circuit.cnot_count_expanded() == 56);
  CHECK(h2_circuit.total_gates() == 150);

  Ansatz lih = generate_uccsd(ActiveSpace{6, 2});
  Circuit lih_circuit = synthesize_ansatz_baseline(lih, 1.0);
  CHECK(lih_circuit.cnot_count_expanded() == 280);
  CHECK(lih_circuit.total_gates() == 610);
}

/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "xtc/errors.hpp"
#include "xtc/simulator.hpp"
#include "xtc/synthesis.hpp"
#include "xtc/uccsd.hpp"

using namespace xtc;
using xtc::testing::exp_antihermitian;

namespace {

// Dense unitary of a bound group: ordered product of the per-term circuits.
DenseOperator bound_group_unitary(int num_qubits, const ParameterGroup& group,
                                  double theta) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const GroupTerm& term : group.terms) {
    u = circuit_unitary(synthesize_chain(term.string, theta * term.coeff)) * u;
  }
  return u;
}

}  // namespace

TEST_CASE("single excitation structure") {
  ParameterGroup g = single_excitation_group(4, 0, 1);
  REQUIRE(g.terms.size() == 2);
  for (const GroupTerm& t : g.terms) {
    CHECK(t.string.weight() == 2);
    CHECK((t.coeff == 0.5 || t.coeff == -0.5));
    CHECK(t.string.support() == std::vector<int>{0, 1});
  }
}

TEST_CASE("single excitation with a Z chain") {
  ParameterGroup g = single_excitation_group(6, 0, 2);
  REQUIRE(g.terms.size() == 2);
  for (const GroupTerm& t : g.terms) {
    CHECK(t.string.weight() == 3);
    CHECK(t.string.op(1) == PauliOp::Z);
  }
}

TEST_CASE("single excitation dense oracle (n=4 and n=6)") {
  Rng rng(53);
  for (auto [n, p, q] : {std::tuple{4, 0, 1}, {6, 0, 2}, {6, 4, 5}}) {
    ParameterGroup g = single_excitation_group(n, p, q);
    double theta = rng.uniform(-1.0, 1.0);
    DenseOperator expected =
        exp_antihermitian(testing::single_excitation_generator(n, p, q), theta);
    DenseOperator actual = bound_group_unitary(n, g, theta);
    CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("invalid excitations are rejected") {
  try {
    single_excitation_group(4, 2, 1);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == "IndexOutOfRange");
  }
  try {
    single_excitation_group(4, 0, 2);  // alpha -> beta
    FAIL("expected SpinBlockViolation");
  } catch (const Error& e) {
    CHECK(e.code() == "SpinBlockViolation");
  }
  CHECK_THROWS_AS(double_excitation_group(4, 0, 2, 1, 1), Error);   // r == s
  CHECK_THROWS_AS(double_excitation_group(4, 0, 1, 2, 3), Error);   // spin flip
}

TEST_CASE("double excitation structure: H2 case") {
  ParameterGroup g = double_excitation_group(4, 0, 2, 1, 3);
  REQUIRE(g.terms.size() == 8);
  std::multiset<double> coeffs;
  for (const GroupTerm& t : g.terms) {
    CHECK(t.string.weight() == 4);  // adjacent pairs, empty Z chains
    coeffs.insert(t.coeff);
  }
  CHECK(coeffs.count(0.125) == 4);
  CHECK(coeffs.count(-0.125) == 4);
}

TEST_CASE("double excitation Z chains land between the sorted index pairs") {
  // support {0,1,3,5}: Z on qubit 4 only (between 3 and 5)
  ParameterGroup g = double_excitation_group(6, 0, 3, 1, 5);
  for (const GroupTerm& t : g.terms) {
    CHECK(t.string.weight() == 5);
    CHECK(t.string.op(4) == PauliOp::Z);
    CHECK(t.string.op(2) == PauliOp::I);
  }
}

TEST_CASE("same-spin double excitation dense oracle (n=8)") {
  // both occupied and both virtual orbitals in the alpha block
  Rng rng(57);
  ParameterGroup g = double_excitation_group(8, 0, 1, 2, 3);
  REQUIRE(g.terms.size() == 8);
  double theta = rng.uniform(-1.0, 1.0);
  DenseOperator expected = exp_antihermitian(
      testing::double_excitation_generator(8, 0, 1, 2, 3), theta);
  DenseOperator actual = bound_group_unitary(8, g, theta);
  CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("double excitation dense oracle") {
  Rng rng(59);
  for (auto [n, p, q, r, s] :
       {std::tuple{4, 0, 2, 1, 3}, {6, 0, 3, 1, 5}, {6, 0, 3, 2, 4}}) {
    ParameterGroup g = double_excitation_group(n, p, q, r, s);
    double theta = rng.uniform(-1.0, 1.0);
    DenseOperator expected = exp_antihermitian(
        testing::double_excitation_generator(n, p, q, r, s), theta);
    DenseOperator actual = bound_group_unitary(n, g, theta);
    CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("bound groups are unitary for random theta") {
  Rng rng(61);
  ActiveSpace space{6, 2};
  Ansatz ansatz = generate_uccsd(space);
  for (int trial = 0; trial < 5; ++trial) {
    const ParameterGroup& g =
        ansatz.groups()[rng.bounded(ansatz.groups().size())];
    double theta = rng.uniform(-2.0, 2.0);
    DenseOperator u = bound_group_unitary(6, g, theta);
    CHECK((u.adjoint() * u - DenseOperator::Identity(64, 64))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("H2 ansatz: 3 parameters, 12 strings") {
  Ansatz ansatz = generate_uccsd(ActiveSpace{4, 2});
  CHECK(ansatz.num_parameters() == 3);
  long pauli = 0;
  for (const ParameterGroup& g : ansatz.groups()) pauli += g.terms.size();
  CHECK(pauli == 12);
  CHECK(ansatz.hf_occupations() == std::vector<int>{0, 2});
  // singles first, then the double
  CHECK(ansatz.groups()[0].terms.size() == 2);
  CHECK(ansatz.groups()[1].terms.size() == 2);
  CHECK(ansatz.groups()[2].terms.size() == 8);
}

TEST_CASE("LiH and CH4 structure counts") {
  Ansatz lih = generate_uccsd(ActiveSpace{6, 2});
  CHECK(lih.num_parameters() == 8);
  long pauli = 0;
  for (const ParameterGroup& g : lih.groups()) pauli += g.terms.size();
  CHECK(pauli == 40);

  Ansatz ch4 = generate_uccsd(ActiveSpace{16, 8});
  CHECK(ch4.num_parameters() == 360);
  pauli = 0;
  for (const ParameterGroup& g : ch4.groups()) pauli += g.terms.size();
  CHECK(pauli == 2688);
}

TEST_CASE("closed-form counts agree with generation for all nine spaces") {
  for (auto [n, eta] : {std::pair{4, 2}, {6, 2}, {8, 2}, {10, 2}, {12, 4},
                        {14, 6}, {16, 8}}) {
    ActiveSpace space{n, eta};
    UccsdCounts counts = uccsd_counts(space);
    Ansatz ansatz = generate_uccsd(space);
    CHECK(ansatz.num_parameters() == counts.parameters);
    long pauli = 0;
    for (const ParameterGroup& g : ansatz.groups()) pauli += g.terms.size();
    CHECK(pauli == counts.pauli_strings);
  }
}

TEST_CASE("string weights follow the Z-chain rule") {
  Ansatz ansatz = generate_uccsd(ActiveSpace{8, 2});
  for (const ParameterGroup& g : ansatz.groups()) {
    if (g.terms.size() == 2) {  // single
      auto support = g.terms[0].string.support();
      int span = support.back() - support.front();
      for (const GroupTerm& t : g.terms) {
        CHECK(t.string.weight() == 2 + (span - 1));
      }
    } else {  // double: X/Y on 4 qubits plus the two inner chains
      for (const GroupTerm& t : g.terms) {
        int xy = 0;
        for (int q = 0; q < 8; ++q) {
          PauliOp op = t.string.op(q);
          if (op == PauliOp::X || op == PauliOp::Y) ++xy;
        }
        CHECK(xy == 4);
        CHECK(t.string.weight() >= 4);
      }
    }
  }
}

TEST_CASE("active space validation") {
  CHECK_THROWS_AS(generate_uccsd(ActiveSpace{5, 2}), Error);
  CHECK_THROWS_AS(generate_uccsd(ActiveSpace{4, 4}), Error);
  CHECK_THROWS_AS(generate_uccsd(ActiveSpace{4, 3}), Error);
}

TEST_CASE("param ids are sequential and group order is deterministic") {
  Ansatz a = generate_uccsd(ActiveSpace{8, 4});
  for (int g = 0; g < a.num_parameters(); ++g) {
    CHECK(a.groups()[static_cast<std::size_t>(g)].param_id == g);
  }
  Ansatz b = generate_uccsd(ActiveSpace{8, 4});
  CHECK(ansatz_to_json_text(a) == ansatz_to_json_text(b));
}

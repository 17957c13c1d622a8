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
#include "xtc/layout.hpp"

using namespace xtc;

namespace {

std::vector<PauliString> parse_all(const std::vector<std::string>& texts) {
  std::vector<PauliString> out;
  for (const auto& t : texts) out.push_back(parse_pauli(t));
  return out;
}

}  // namespace

TEST_CASE("layout bookkeeping") {
  Layout layout(3, 5);
  CHECK(!layout.is_complete());
  layout.place(0, 4);
  layout.place(1, 0);
  layout.place(2, 2);
  CHECK(layout.is_complete());
  CHECK(layout.physical_of(0) == 4);
  CHECK(layout.logical_at(4) == 0);
  CHECK(layout.logical_at(1) == -1);
  layout.swap_physical(4, 1);  // move logical 0 into the free slot
  CHECK(layout.physical_of(0) == 1);
  CHECK(layout.logical_at(4) == -1);
  CHECK_THROWS_AS(layout.place(0, 3), Error);
  CHECK_THROWS_AS(Layout(6, 5), Error);
}

TEST_CASE("cooccurrence of a single ZZ string") {
  auto strings = parse_all({"ZZ"});
  auto mat = cooccurrence_matrix(strings);
  CHECK(mat[0][1] == 1);
  CHECK(mat[1][0] == 1);
  CHECK(mat[0][0] == 0);
  CHECK(mat[1][1] == 0);
}

TEST_CASE("cooccurrence equals brute-force pair enumeration") {
  Rng rng(113);
  std::vector<PauliString> strings;
  for (int j = 0; j < 20; ++j) {
    strings.push_back(testing::random_pauli(rng, 6));
  }
  auto mat = cooccurrence_matrix(strings);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      long expected = 0;
      if (a != b) {
        for (const PauliString& p : strings) {
          if (p.op(a) != PauliOp::I && p.op(b) != PauliOp::I) ++expected;
        }
      }
      CHECK(mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
            expected);
    }
  }
}

TEST_CASE("hierarchical layout reproduces the worked six-qubit example") {
  // q0 appears in every string; q1..q4 next; q5 shares a string only with
  // q0 and q3 and lands on a child slot of q3's physical qubit
  auto strings = parse_all({
      "IIIZZZ",  // q0 q1 q2
      "IIZZIZ",  // q0 q2 q3
      "IZZIIZ",  // q0 q3 q4
      "IZIIZZ",  // q0 q1 q4
      "ZIZIIZ",  // q0 q3 q5
  });
  Architecture arch = make_architecture("XTree17Q");
  Layout layout = hierarchical_layout(strings, arch);

  CHECK(layout.logical_at(arch.root()) == 0);
  // q1..q4 on the four level-1 qubits
  std::set<int> level1_logicals;
  for (int phys : arch.qubits_at_level(1)) {
    level1_logicals.insert(layout.logical_at(phys));
  }
  CHECK(level1_logicals == std::set<int>{1, 2, 3, 4});
  // q5 under q3's physical qubit
  int q5_phys = layout.physical_of(5);
  CHECK(arch.level(q5_phys) == 2);
  CHECK(layout.logical_at(arch.parent(q5_phys)) == 3);
}

TEST_CASE("one logical qubit maps to the root") {
  auto strings = parse_all({"Z"});
  Architecture arch = make_architecture("XTree5Q");
  Layout layout = hierarchical_layout(strings, arch);
  CHECK(layout.physical_of(0) == arch.root());
}

TEST_CASE("layout is bijective on random programs") {
  Rng rng(127);
  Architecture arch = make_architecture("XTree17Q");
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.bounded(17));
    std::vector<PauliString> strings;
    int count = 1 + static_cast<int>(rng.bounded(30));
    for (int j = 0; j < count; ++j) {
      strings.push_back(testing::random_pauli(rng, n));
    }
    Layout layout = hierarchical_layout(strings, arch);
    CHECK(layout.is_complete());
    std::set<int> used;
    for (int l = 0; l < n; ++l) {
      int p = layout.physical_of(l);
      CHECK(p >= 0);
      CHECK(p < arch.num_qubits());
      CHECK(used.insert(p).second);  // no two logicals share a slot
      CHECK(layout.logical_at(p) == l);
    }
  }
}

TEST_CASE("high-occurrence qubits land on low levels") {
  Rng rng(131);
  Architecture arch = make_architecture("XTree17Q");
  std::vector<PauliString> strings;
  for (int j = 0; j < 40; ++j) {
    strings.push_back(testing::random_pauli(rng, 10));
  }
  Layout layout = hierarchical_layout(strings, arch);
  auto mat = cooccurrence_matrix(strings);
  std::vector<long> occurrence(10, 0);
  for (int q = 0; q < 10; ++q) {
    for (int k = 0; k < 10; ++k) occurrence[q] += mat[q][k];
  }
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      if (occurrence[a] > occurrence[b]) {
        CHECK(arch.level(layout.physical_of(a)) <=
              arch.level(layout.physical_of(b)));
      }
    }
  }
}

TEST_CASE("capacity violations are rejected") {
  auto strings = parse_all({"ZZZZZZ"});
  Architecture arch = make_architecture("XTree5Q");
  try {
    hierarchical_layout(strings, arch);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == "CapacityExceeded");
  }
  Architecture grid = load_architecture(std::string(XTC_DATA_DIR) +
                                        "/grid17q.json");
  CHECK_THROWS_AS(hierarchical_layout(strings, grid), Error);  // NotATree
}

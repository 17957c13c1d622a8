/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "xtc/pauli.hpp"

namespace xtc {

/**
 * Active space in block-spin layout: alpha spin-orbitals occupy qubits
 * 0..m-1 and beta spin-orbitals occupy m..2m-1, where m = num_spin_orbitals/2
 * spatial orbitals. Both counts must be even, 0 < electrons < spin orbitals.
 */
struct ActiveSpace {
  int num_spin_orbitals;
  int num_electrons;

  void validate() const;
  int num_spatial() const { return num_spin_orbitals / 2; }
  int occupied_per_block() const { return num_electrons / 2; }
  int virtual_per_block() const {
    return num_spatial() - occupied_per_block();
  }
};

/**
 * Jordan-Wigner image of the anti-Hermitian single excitation
 * a+_q a_p - a+_p a_q (p occupied, q virtual, same spin block): exactly two
 * strings with X/Y on p and q, Z on every qubit strictly between, and
 * coefficients +-1/2. Binding the group at value theta yields
 * exp(-i theta sum_k coeff_k P_k).
 */
ParameterGroup single_excitation_group(int num_qubits, int p, int q,
                                       int param_id = 0);

/**
 * Jordan-Wigner image of a+_r a+_s a_q a_p - h.c. (occupied pair (p, q),
 * virtual pair (r, s), spin conserving): exactly eight strings with X/Y on
 * the four excitation qubits plus Z chains, coefficients +-1/8.
 */
ParameterGroup double_excitation_group(int num_qubits, int p, int q, int r,
                                       int s, int param_id = 0);

/**
 * Full UCCSD ansatz: one group per spin-preserving single and per
 * spin-conserving double (alpha-alpha, beta-beta, alpha-beta), singles
 * first, each family in lexicographic index order. HF occupations are the
 * lowest electrons/2 orbitals of each spin block.
 */
Ansatz generate_uccsd(const ActiveSpace& space);

/// Closed-form structure counts (used for cross-checking generate_uccsd).
struct UccsdCounts {
  long singles;
  long doubles;
  long parameters;
  long pauli_strings;
};
UccsdCounts uccsd_counts(const ActiveSpace& space);

}  // namespace xtc

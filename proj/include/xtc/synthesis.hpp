/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "xtc/circuit.hpp"
#include "xtc/pauli.hpp"

namespace xtc {

/**
 * Spanning tree over the support of a Pauli string. CNOTs run child ->
 * parent from the leaves to the root, accumulating parity at the root.
 */
class CnotTree {
 public:
  /// parent_of[q] = parent qubit, or -1 for the root. Keys must be exactly
  /// the support set of the string the tree is used with.
  CnotTree(std::vector<int> nodes, std::vector<int> parent_of, int root);

  const std::vector<int>& nodes() const { return nodes_; }
  int root() const { return root_; }
  int parent(int qubit) const;
  /// Child->parent edges ordered deepest level first (emission order).
  const std::vector<std::pair<int, int>>& edges_leaves_first() const {
    return ordered_edges_;
  }

 private:
  std::vector<int> nodes_;   // ascending
  std::vector<int> parent_;  // aligned with nodes_
  int root_;
  std::vector<std::pair<int, int>> ordered_edges_;
};

/// Chain tree: support qubits ascending, q_i -> q_{i+1}, rooted at the
/// highest-index support qubit. Throws EmptySupport.
CnotTree chain_tree(const PauliString& p);

/// Star tree rooted at the given support qubit.
CnotTree star_tree(const PauliString& p, int root);

/**
 * Simulation circuit for exp(-i * theta * P): basis changes (H for X,
 * RX(+pi/2) for Y), CNOT tree leaves-to-root, RZ(2 theta) on the root,
 * then the mirrored CNOTs and closing basis changes (RX(-pi/2) for Y).
 */
Circuit synthesize(const PauliString& p, double theta, const CnotTree& tree);

/// synthesize() with the chain tree.
Circuit synthesize_chain(const PauliString& p, double theta);

/**
 * Logical-qubit chain-synthesized circuit of a bound ansatz: X gates on the
 * HF occupations, then per group, per term, exp(-i * value * coeff * P).
 * All-identity strings contribute only a global phase and are skipped.
 */
Circuit synthesize_ansatz_baseline(const Ansatz& ansatz,
                                   std::span<const double> values);

/// Convenience: all parameters bound to the same value.
Circuit synthesize_ansatz_baseline(const Ansatz& ansatz, double value = 1.0);

}  // namespace xtc

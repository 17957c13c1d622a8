/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/synthesis.hpp"

#include <algorithm>
#include <numbers>

#include "xtc/errors.hpp"

namespace xtc {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

CnotTree::CnotTree(std::vector<int> nodes, std::vector<int> parent_of, int root)
    : nodes_(std::move(nodes)), parent_(std::move(parent_of)), root_(root) {
  if (nodes_.empty()) throw_validation("EmptySupport", "tree has no nodes");
  if (nodes_.size() != parent_.size()) {
    throw_validation("TreeSupportMismatch", "parent list size mismatch");
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end())) {
    std::vector<std::pair<int, int>> paired;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      paired.emplace_back(nodes_[i], parent_[i]);
    std::sort(paired.begin(), paired.end());
    for (std::size_t i = 0; i < paired.size(); ++i) {
      nodes_[i] = paired[i].first;
      parent_[i] = paired[i].second;
    }
  }
  // depth of every node; also validates that parent links reach the root
  std::vector<int> depth(nodes_.size(), -1);
  auto index_of = [&](int q) -> int {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), q);
    if (it == nodes_.end() || *it != q) return -1;
    return static_cast<int>(it - nodes_.begin());
  };
  int root_index = index_of(root_);
  if (root_index < 0 || parent_[static_cast<std::size_t>(root_index)] != -1) {
    throw_validation("TreeSupportMismatch", "root must be a node with no parent");
  }
  depth[static_cast<std::size_t>(root_index)] = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    // walk up; cycles or foreign parents are rejected
    std::vector<int> chain;
    int cur = static_cast<int>(i);
    while (depth[static_cast<std::size_t>(cur)] < 0) {
      chain.push_back(cur);
      int p = parent_[static_cast<std::size_t>(cur)];
      int pi = p < 0 ? -1 : index_of(p);
      if (pi < 0) {
        throw_validation("TreeSupportMismatch",
                         "parent of node " + std::to_string(nodes_[static_cast<std::size_t>(cur)]) +
                             " is not in the tree");
      }
      if (static_cast<std::size_t>(chain.size()) > nodes_.size()) {
        throw_validation("TreeSupportMismatch", "cycle in parent links");
      }
      cur = pi;
    }
    int d = depth[static_cast<std::size_t>(cur)];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[static_cast<std::size_t>(*it)] = ++d;
    }
  }
  // child -> parent edges, deepest first, ties by lower child index
  std::vector<std::pair<int, std::size_t>> order;  // (-depth, node idx)
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (parent_[i] >= 0) order.emplace_back(-depth[i], i);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [negd, i] : order) {
    ordered_edges_.emplace_back(nodes_[i], parent_[i]);
  }
}

int CnotTree::parent(int qubit) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), qubit);
  if (it == nodes_.end() || *it != qubit) {
    throw_validation("TreeSupportMismatch",
                     "qubit " + std::to_string(qubit) + " not in tree");
  }
  return parent_[static_cast<std::size_t>(it - nodes_.begin())];
}

CnotTree chain_tree(const PauliString& p) {
  std::vector<int> support = p.support();
  if (support.empty()) {
    throw_validation("EmptySupport", "all-identity string has no CNOT tree");
  }
  std::vector<int> parent(support.size(), -1);
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    parent[i] = support[i + 1];
  }
  return CnotTree(std::move(support), std::move(parent), p.support().back());
}

CnotTree star_tree(const PauliString& p, int root) {
  std::vector<int> support = p.support();
  if (support.empty()) {
    throw_validation("EmptySupport", "all-identity string has no CNOT tree");
  }
  std::vector<int> parent(support.size(), root);
  auto it = std::lower_bound(support.begin(), support.end(), root);
  if (it == support.end() || *it != root) {
    throw_validation("TreeSupportMismatch", "root not in support");
  }
  parent[static_cast<std::size_t>(it - support.begin())] = -1;
  return CnotTree(std::move(support), std::move(parent), root);
}

Circuit synthesize(const PauliString& p, double theta, const CnotTree& tree) {
  if (tree.nodes() != p.support()) {
    throw_validation("TreeSupportMismatch",
                     "tree nodes differ from the string support");
  }
  Circuit circuit(p.num_qubits());
  // opening basis changes, ascending qubit order
  for (int q : tree.nodes()) {
    if (p.op(q) == PauliOp::X) circuit.append(Gate::h(q));
    if (p.op(q) == PauliOp::Y) circuit.append(Gate::rx(q, kHalfPi));
  }
  for (const auto& [child, parent] : tree.edges_leaves_first()) {
    circuit.append(Gate::cnot(child, parent));
  }
  circuit.append(Gate::rz(tree.root(), 2.0 * theta));
  const auto& edges = tree.edges_leaves_first();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    circuit.append(Gate::cnot(it->first, it->second));
  }
  // closing basis changes mirror the opening order
  const auto& nodes = tree.nodes();
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    if (p.op(*it) == PauliOp::X) circuit.append(Gate::h(*it));
    if (p.op(*it) == PauliOp::Y) circuit.append(Gate::rx(*it, -kHalfPi));
  }
  return circuit;
}

Circuit synthesize_chain(const PauliString& p, double theta) {
  return synthesize(p, theta, chain_tree(p));
}

Circuit synthesize_ansatz_baseline(const Ansatz& ansatz,
                                   std::span<const double> values) {
  if (values.size() != ansatz.groups().size()) {
    throw_validation("ArityMismatch",
                     "got " + std::to_string(values.size()) + " values for " +
                         std::to_string(ansatz.groups().size()) + " groups");
  }
  Circuit circuit(ansatz.num_qubits());
  std::vector<int> occ = ansatz.hf_occupations();
  std::sort(occ.begin(), occ.end());
  for (int q : occ) circuit.append(Gate::x(q));
  for (std::size_t g = 0; g < ansatz.groups().size(); ++g) {
    for (const GroupTerm& term : ansatz.groups()[g].terms) {
      if (term.string.is_identity()) continue;  // global phase only
      circuit.append(synthesize_chain(term.string, values[g] * term.coeff));
    }
  }
  return circuit;
}

Circuit synthesize_ansatz_baseline(const Ansatz& ansatz, double value) {
  std::vector<double> values(ansatz.groups().size(), value);
  return synthesize_ansatz_baseline(ansatz, values);
}

}  // namespace xtc

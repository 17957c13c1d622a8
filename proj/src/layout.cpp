/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/layout.hpp"

#include <algorithm>
#include <numeric>

#include "xtc/errors.hpp"

namespace xtc {

Layout::Layout(int num_logical, int num_physical)
    : log_to_phys_(static_cast<std::size_t>(num_logical), -1),
      phys_to_log_(static_cast<std::size_t>(num_physical), -1) {
  if (num_logical <= 0 || num_physical <= 0) {
    throw_validation("CapacityExceeded", "qubit counts must be positive");
  }
  if (num_logical > num_physical) {
    throw_validation("CapacityExceeded",
                     std::to_string(num_logical) +
                         " logical qubits exceed " +
                         std::to_string(num_physical) + " physical qubits");
  }
}

Layout Layout::trivial(int num_logical, int num_physical) {
  Layout layout(num_logical, num_physical);
  for (int i = 0; i < num_logical; ++i) layout.place(i, i);
  return layout;
}

int Layout::physical_of(int logical) const {
  if (logical < 0 || logical >= num_logical()) {
    throw_validation("LayoutMismatch",
                     "logical qubit " + std::to_string(logical) + " unknown");
  }
  return log_to_phys_[static_cast<std::size_t>(logical)];
}

int Layout::logical_at(int physical) const {
  if (physical < 0 || physical >= num_physical()) {
    throw_validation("LayoutMismatch",
                     "physical qubit " + std::to_string(physical) + " unknown");
  }
  return phys_to_log_[static_cast<std::size_t>(physical)];
}

bool Layout::is_complete() const {
  return std::none_of(log_to_phys_.begin(), log_to_phys_.end(),
                      [](int p) { return p < 0; });
}

void Layout::place(int logical, int physical) {
  if (logical < 0 || logical >= num_logical() || physical < 0 ||
      physical >= num_physical()) {
    throw_validation("LayoutMismatch", "placement out of range");
  }
  if (phys_to_log_[static_cast<std::size_t>(physical)] != -1) {
    throw_validation("LayoutMismatch",
                     "physical qubit " + std::to_string(physical) +
                         " already occupied");
  }
  if (log_to_phys_[static_cast<std::size_t>(logical)] != -1) {
    throw_validation("LayoutMismatch",
                     "logical qubit " + std::to_string(logical) +
                         " already placed");
  }
  log_to_phys_[static_cast<std::size_t>(logical)] = physical;
  phys_to_log_[static_cast<std::size_t>(physical)] = logical;
}

void Layout::swap_physical(int a, int b) {
  if (a < 0 || a >= num_physical() || b < 0 || b >= num_physical()) {
    throw_validation("LayoutMismatch", "swap out of range");
  }
  int la = phys_to_log_[static_cast<std::size_t>(a)];
  int lb = phys_to_log_[static_cast<std::size_t>(b)];
  phys_to_log_[static_cast<std::size_t>(a)] = lb;
  phys_to_log_[static_cast<std::size_t>(b)] = la;
  if (la != -1) log_to_phys_[static_cast<std::size_t>(la)] = b;
  if (lb != -1) log_to_phys_[static_cast<std::size_t>(lb)] = a;
}

std::vector<std::vector<long>> cooccurrence_matrix(
    std::span<const PauliString> strings) {
  int n = strings.empty() ? 0 : strings[0].num_qubits();
  std::vector<std::vector<long>> mat(
      static_cast<std::size_t>(n),
      std::vector<long>(static_cast<std::size_t>(n), 0));
  for (const PauliString& p : strings) {
    if (p.num_qubits() != n) {
      throw_validation("LengthMismatch", "strings differ in qubit count");
    }
    std::vector<int> support = p.support();
    for (std::size_t i = 0; i < support.size(); ++i) {
      for (std::size_t j = i + 1; j < support.size(); ++j) {
        mat[static_cast<std::size_t>(support[i])]
           [static_cast<std::size_t>(support[j])]++;
        mat[static_cast<std::size_t>(support[j])]
           [static_cast<std::size_t>(support[i])]++;
      }
    }
  }
  return mat;
}

Layout hierarchical_layout(std::span<const PauliString> strings,
                           const Architecture& arch) {
  if (!arch.is_tree()) {
    throw_validation("NotATree", "hierarchical layout requires a tree");
  }
  if (strings.empty()) {
    throw_validation("LayoutMismatch", "no strings to lay out");
  }
  const int n_logical = strings[0].num_qubits();
  if (n_logical > arch.num_qubits()) {
    throw_validation("CapacityExceeded",
                     std::to_string(n_logical) + " logical qubits exceed " +
                         std::to_string(arch.num_qubits()) + " physical");
  }

  auto mat = cooccurrence_matrix(strings);
  std::vector<long> occurrence(static_cast<std::size_t>(n_logical), 0);
  for (int j = 0; j < n_logical; ++j) {
    occurrence[static_cast<std::size_t>(j)] =
        std::accumulate(mat[static_cast<std::size_t>(j)].begin(),
                        mat[static_cast<std::size_t>(j)].end(), 0L);
  }
  std::vector<int> order(static_cast<std::size_t>(n_logical));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return occurrence[static_cast<std::size_t>(a)] >
           occurrence[static_cast<std::size_t>(b)];
  });

  Layout layout(n_logical, arch.num_qubits());
  for (int logical : order) {
    // lowest level with a free slot
    int chosen = -1;
    for (int level = 0; level < arch.num_levels() && chosen < 0; ++level) {
      long best_affinity = -1;
      for (int phys : arch.qubits_at_level(level)) {
        if (layout.logical_at(phys) != -1) continue;
        long affinity = 0;
        int parent = arch.parent(phys);
        if (parent >= 0) {
          int holder = layout.logical_at(parent);
          if (holder >= 0) {
            affinity = mat[static_cast<std::size_t>(logical)]
                          [static_cast<std::size_t>(holder)];
          }
        }
        if (affinity > best_affinity) {  // ties keep the lower physical index
          best_affinity = affinity;
          chosen = phys;
        }
      }
    }
    if (chosen < 0) {
      throw_validation("CapacityExceeded", "no free physical slot");
    }
    layout.place(logical, chosen);
  }
  return layout;
}

}  // namespace xtc

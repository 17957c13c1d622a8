/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "xtc/architecture.hpp"
#include "xtc/pauli.hpp"

namespace xtc {

/**
 * Logical-to-physical qubit map with a consistent inverse. Logical count
 * never exceeds the physical count; unassigned physical qubits report -1.
 */
class Layout {
 public:
  Layout(int num_logical, int num_physical);
  /// logical i -> physical i
  static Layout trivial(int num_logical, int num_physical);

  int num_logical() const { return static_cast<int>(log_to_phys_.size()); }
  int num_physical() const { return static_cast<int>(phys_to_log_.size()); }
  int physical_of(int logical) const;
  int logical_at(int physical) const;  ///< -1 when free
  bool is_complete() const;            ///< every logical qubit is placed

  void place(int logical, int physical);
  /// Exchange the occupants (either may be free) of two physical qubits.
  void swap_physical(int a, int b);

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<int> log_to_phys_;
  std::vector<int> phys_to_log_;
};

/// Mat[j][k] = number of strings whose support contains both j and k
/// (j != k); the diagonal is zero.
std::vector<std::vector<long>> cooccurrence_matrix(
    std::span<const PauliString> strings);

/**
 * Hierarchical initial layout over a tree architecture: logical qubits
 * sorted by descending occurrence (co-occurrence row sums, ties to the
 * lower logical index) are placed on the lowest free level; among free
 * slots the one whose occupied parent co-occurs most with the newcomer is
 * chosen (ties to the lower physical index).
 */
Layout hierarchical_layout(std::span<const PauliString> strings,
                           const Architecture& arch);

}  // namespace xtc

/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xtc/architecture.hpp"
#include "xtc/pauli.hpp"
#include "xtc/uccsd.hpp"

namespace xtc {

struct BenchSpace {
  std::string label;
  ActiveSpace space;
};

/// The nine benchmark active spaces with their molecule labels.
std::vector<BenchSpace> default_bench_spaces();

/**
 * Scoring Hamiltonian used when no molecular file is supplied: seeded
 * uniform weights in [-1, 1) over the distinct Pauli strings of the UCCSD
 * ansatz itself. Synthetic by construction; outputs carry a flag row.
 */
Hamiltonian synthetic_hamiltonian(const Ansatz& ansatz, std::uint64_t seed);

/// Structure-count table: qubits, Pauli strings, parameters, chain-synthesis
/// gate and CNOT totals per space.
std::string table1_csv(std::span<const BenchSpace> spaces);

struct Table2Cell {
  std::string label;
  int qubits;
  double ratio;
  long original_cnots;
  long mtr_added;
  long baseline_tree_added;
  long baseline_grid_added;
};

/// Mapping-overhead table over compression ratios: merge-to-root on the
/// tree architecture vs the baseline router on the tree and on the grid.
/// `scoring` supplies one Hamiltonian per space; when empty, seeded
/// synthetic Hamiltonians are used instead.
std::vector<Table2Cell> table2_cells(std::span<const BenchSpace> spaces,
                                     std::span<const double> ratios,
                                     const Architecture& tree,
                                     const Architecture& grid,
                                     std::uint64_t seed,
                                     std::span<const Hamiltonian> scoring = {});
std::string table2_csv(std::span<const Table2Cell> cells, std::uint64_t seed,
                       bool synthetic = true);

/// Edge counts, degree histograms and distance statistics, one block per
/// architecture.
std::string arch_report(std::span<const Architecture> archs,
                        std::span<const std::string> names);

/// CSV <-> JSON helper for the table commands ("csv" or "json").
std::string table_to_format(const std::string& csv, const std::string& format);

}  // namespace xtc

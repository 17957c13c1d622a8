/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <span>
#include <vector>

#include "xtc/architecture.hpp"
#include "xtc/circuit.hpp"
#include "xtc/layout.hpp"
#include "xtc/pauli.hpp"

namespace xtc {

/// Routing overhead accounting: 3 added CNOTs per inserted SWAP.
struct CompileStats {
  long original_cnots = 0;
  long added_swap_count = 0;
  long added_cnots = 0;  // always 3 * added_swap_count
  long total_cnots = 0;
  std::vector<long> swaps_per_string;  // empty for gate-list routing
};

struct CompileResult {
  Circuit circuit;  // physical-qubit indexed
  CompileStats stats;
  Layout final_layout;
};

/**
 * Merge-to-Root combined synthesis and routing of a bound ansatz onto a
 * tree architecture.
 *
 * Per string, level by level from the leaves: an active qubit whose parent
 * slot is inactive swaps the most-reused active sibling up (reuse counted
 * over the not-yet-compiled strings, ties to the lower logical index), then
 * every active qubit merges into its parent by a CNOT. The rotation lands
 * on the last remaining active qubit. The mirror pass replays the merge
 * CNOTs in reverse on the logical operands' current positions, inserting
 * SWAPs if an operand has moved since. Layout mutations persist across
 * strings; swaps_per_string records both passes.
 */
CompileResult merge_to_root(const Ansatz& ansatz,
                            std::span<const double> values,
                            const Architecture& arch, const Layout& initial);

/// All parameters bound to the same value.
CompileResult merge_to_root(const Ansatz& ansatz, const Architecture& arch,
                            const Layout& initial, double value = 1.0);

/**
 * Greedy lookahead router for logical gate-list circuits on arbitrary
 * connected architectures (general-purpose baseline). Frontier gates on
 * adjacent qubits execute; otherwise the SWAP minimizing the summed
 * shortest-path distance of the frontier plus 0.5 x the distance of the
 * next 20 two-qubit gates is inserted (deterministic lexicographic
 * tie-break).
 */
CompileResult baseline_route(const Circuit& logical, const Architecture& arch,
                             const Layout& initial);

}  // namespace xtc

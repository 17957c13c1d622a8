/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "xtc/pauli.hpp"

namespace xtc {

/// Importance scores per parameter. `scores` follows the original group
/// order; `ranking` lists param_ids by descending score (ties broken by the
/// lower original group index).
struct ImportanceReport {
  std::vector<int> param_ids;   // original order
  std::vector<double> scores;   // aligned with param_ids
  std::vector<int> ranking;     // param_ids, best first
};

/**
 * Importance decay factor d: the number of qubit positions where the ansatz
 * operator is I, or the Hamiltonian operator is I, or the two operators are
 * equal (a position satisfying several conditions counts once).
 */
int decay_distance(const PauliString& pa, const PauliString& ph);

/// Sum over (group term, Hamiltonian term) of 2^-d * |weight|. Group
/// coefficients do not enter.
double parameter_importance(const ParameterGroup& group, const Hamiltonian& h);

ImportanceReport importance_report(const Ansatz& ansatz, const Hamiltonian& h);

/**
 * Keep the ceil(ratio * K) highest-importance groups, emitted in
 * importance-decreasing order (the hardware-friendly order). HF occupations
 * are preserved. ratio must lie in (0, 1].
 */
Ansatz compress_ansatz(const Ansatz& ansatz, const Hamiltonian& h,
                       double ratio);

/// Uniformly random ceil(ratio * K)-subset of groups, original order kept,
/// deterministic for a fixed seed.
Ansatz random_compress(const Ansatz& ansatz, double ratio, std::uint64_t seed);

/// CSV with columns param_id, score, rank (rank 1 = most important).
std::string importance_csv(const ImportanceReport& report);

}  // namespace xtc

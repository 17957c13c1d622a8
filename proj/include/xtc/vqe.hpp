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
#include "xtc/circuit.hpp"
#include "xtc/layout.hpp"
#include "xtc/pauli.hpp"

namespace xtc {

enum class OptimizerKind {
  QuasiNewton,  ///< BFGS on exact parameter-shift gradients
  NelderMead,
};

struct VqeConfig {
  OptimizerKind optimizer = OptimizerKind::QuasiNewton;
  double energy_tol = 1e-6;  // Hartree
  int max_iters = 500;
  bool random_init = false;  // zeros otherwise (HF starting point)
  std::uint64_t seed = 0;
};

struct VqeResult {
  double final_energy = 0.0;
  std::vector<double> params;
  int iterations = 0;
  std::vector<double> trace;       // energy after each iteration
  std::vector<double> grad_norms;  // aligned with trace (0 for Nelder-Mead)
  long energy_evaluations = 0;
};

/// Hard cap for VQE statevector feasibility.
inline constexpr int kMaxVqeQubits = 16;

/**
 * Chain-synthesized circuit of the ansatz at the given parameter values
 * (each term's RZ angle is 2 * value * coeff). Throws ArityMismatch.
 */
Circuit bind_parameters(const Ansatz& ansatz, std::span<const double> values);

/**
 * Merge-to-root compiled template with the angles substituted: the
 * physical-qubit circuit of merge_to_root at these values. Acts on the
 * register permuted by the returned final layout.
 */
Circuit bind_parameters_mtr(const Ansatz& ansatz,
                            std::span<const double> values,
                            const Architecture& arch, const Layout& initial,
                            Layout* final_layout = nullptr);

/**
 * Minimize E(theta) = <psi(theta)|H|psi(theta)> over the ansatz parameters.
 * The best-so-far energy is monotone non-increasing; iteration = one
 * accepted optimizer step; stops when the energy improvement drops below
 * energy_tol or after max_iters steps. Deterministic for a fixed config.
 */
VqeResult run_vqe(const Hamiltonian& h, const Ansatz& ansatz,
                  const VqeConfig& config);

struct ConvergenceRow {
  double ratio;
  int parameters;
  int iterations;
  long energy_evaluations;
  double final_energy;
  double error_vs_exact;
};

/// Compress at each ratio (importance order), run VQE, report convergence.
/// Errors are measured against the exact dense ground energy.
std::vector<ConvergenceRow> convergence_compare(const Hamiltonian& h,
                                                const Ansatz& full_ansatz,
                                                std::span<const double> ratios,
                                                const VqeConfig& config);

/// Trace CSV with columns iter, energy, grad_norm.
std::string vqe_trace_csv(const VqeResult& result);

}  // namespace xtc

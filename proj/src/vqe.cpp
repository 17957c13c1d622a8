/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "xtc/compress.hpp"
#include "xtc/errors.hpp"
#include "xtc/rng.hpp"
#include "xtc/route.hpp"
#include "xtc/simulator.hpp"
#include "xtc/synthesis.hpp"

namespace xtc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

/// Bound circuit plus the location of every parameterized RZ gate, so the
/// parameter-shift rule can patch individual rotations in place.
struct BoundTemplate {
  Circuit circuit;
  // per parameter: list of (gate index, coeff)
  std::vector<std::vector<std::pair<std::size_t, double>>> rz_sites;
};

BoundTemplate build_template(const Ansatz& ansatz,
                             std::span<const double> values) {
  BoundTemplate out{Circuit(ansatz.num_qubits()), {}};
  out.rz_sites.resize(ansatz.groups().size());
  std::vector<int> occ = ansatz.hf_occupations();
  std::sort(occ.begin(), occ.end());
  for (int q : occ) out.circuit.append(Gate::x(q));
  for (std::size_t g = 0; g < ansatz.groups().size(); ++g) {
    for (const GroupTerm& term : ansatz.groups()[g].terms) {
      if (term.string.is_identity()) continue;
      Circuit block = synthesize_chain(term.string, values[g] * term.coeff);
      std::size_t base = out.circuit.size();
      out.circuit.append(block);
      for (std::size_t k = 0; k < block.size(); ++k) {
        if (block.gates()[k].kind == GateKind::RZ) {
          out.rz_sites[g].emplace_back(base + k, term.coeff);
        }
      }
    }
  }
  return out;
}

class EnergyModel {
 public:
  EnergyModel(const Hamiltonian& h, const Ansatz& ansatz)
      : h_(h), ansatz_(ansatz) {}

  double energy(std::span<const double> values) {
    ++evals_;
    Circuit c = bind_parameters(ansatz_, values);
    StateVector s = StateVector::zero_state(ansatz_.num_qubits());
    s.apply(c);
    double e = xtc::energy(s, h_);
    if (!std::isfinite(e)) {
      throw_validation("NonFiniteEnergy", "energy evaluation diverged");
    }
    return e;
  }

  /// Exact gradient via the parameter-shift rule: for each RZ site with
  /// angle x = 2 theta c, dE/dtheta accumulates c * (E[x+pi/2] - E[x-pi/2]).
  std::vector<double> gradient(std::span<const double> values) {
    BoundTemplate tmpl = build_template(ansatz_, values);
    std::vector<Gate> gates = tmpl.circuit.gates();
    auto eval = [&]() {
      ++evals_;
      Circuit c(ansatz_.num_qubits());
      for (const Gate& g : gates) c.append(g);
      StateVector s = StateVector::zero_state(ansatz_.num_qubits());
      s.apply(c);
      return xtc::energy(s, h_);
    };
    std::vector<double> grad(values.size(), 0.0);
    for (std::size_t g = 0; g < values.size(); ++g) {
      for (const auto& [site, coeff] : tmpl.rz_sites[g]) {
        double original = gates[site].angle;
        gates[site].angle = original + kHalfPi;
        double plus = eval();
        gates[site].angle = original - kHalfPi;
        double minus = eval();
        gates[site].angle = original;
        grad[g] += coeff * (plus - minus);
      }
    }
    return grad;
  }

  long evals() const { return evals_; }

 private:
  const Hamiltonian& h_;
  const Ansatz& ansatz_;
  long evals_ = 0;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

VqeResult run_quasi_newton(EnergyModel& model, std::vector<double> params,
                           const VqeConfig& config) {
  const std::size_t n = params.size();
  VqeResult result;

  double e = model.energy(params);
  std::vector<double> grad = model.gradient(params);

  // inverse Hessian approximation, dense BFGS
  std::vector<std::vector<double>> hinv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) hinv[i][i] = 1.0;

  for (int iter = 0; iter < config.max_iters; ++iter) {
    std::vector<double> direction(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        direction[i] -= hinv[i][j] * grad[j];
      }
    }
    double slope = dot(direction, grad);
    if (slope >= 0.0) {  // lost positive definiteness; restart on -grad
      for (std::size_t i = 0; i < n; ++i) {
        std::fill(hinv[i].begin(), hinv[i].end(), 0.0);
        hinv[i][i] = 1.0;
        direction[i] = -grad[i];
      }
      slope = dot(direction, grad);
      if (slope >= 0.0) break;  // zero gradient
    }

    // Armijo backtracking
    double step = 1.0;
    double e_new = e;
    std::vector<double> trial(n);
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = params[i] + step * direction[i];
      e_new = model.energy(trial);
      if (e_new <= e + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> grad_new = model.gradient(trial);
    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = trial[i] - params[i];
      y[i] = grad_new[i] - grad[i];
    }
    double sy = dot(s, y);
    if (sy > 1e-12) {
      // BFGS inverse update: H <- (I - s y^T / sy) H (I - y s^T / sy) + s s^T / sy
      std::vector<double> hy(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) hy[i] += hinv[i][j] * y[j];
      }
      double yhy = dot(y, hy);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          hinv[i][j] += (sy + yhy) * s[i] * s[j] / (sy * sy) -
                        (hy[i] * s[j] + s[i] * hy[j]) / sy;
        }
      }
    }

    double improvement = e - e_new;
    params = trial;
    grad = std::move(grad_new);
    e = e_new;
    result.iterations++;
    result.trace.push_back(e);
    result.grad_norms.push_back(norm2(grad));
    if (improvement < config.energy_tol) break;
  }

  if (result.trace.empty()) {  // no step accepted: report the start point
    result.iterations = 1;
    result.trace.push_back(e);
    result.grad_norms.push_back(norm2(grad));
  }
  result.final_energy = result.trace.back();
  result.params = std::move(params);
  return result;
}

VqeResult run_nelder_mead(EnergyModel& model, std::vector<double> start,
                          const VqeConfig& config) {
  const std::size_t n = start.size();
  VqeResult result;

  std::vector<std::vector<double>> simplex{start};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = start;
    v[i] += 0.1;
    simplex.push_back(std::move(v));
  }
  std::vector<double> energies;
  for (const auto& v : simplex) energies.push_back(model.energy(v));

  auto order = [&] {
    std::vector<std::size_t> idx(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return energies[a] < energies[b];
    });
    std::vector<std::vector<double>> sx;
    std::vector<double> se;
    for (std::size_t i : idx) {
      sx.push_back(simplex[i]);
      se.push_back(energies[i]);
    }
    simplex = std::move(sx);
    energies = std::move(se);
  };
  order();

  double best = energies.front();
  for (int iter = 0; iter < config.max_iters; ++iter) {
    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto combine = [&](double alpha) {
      std::vector<double> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = centroid[i] + alpha * (simplex.back()[i] - centroid[i]);
      }
      return out;
    };

    std::vector<double> reflected = combine(-1.0);
    double er = model.energy(reflected);
    if (er < energies.front()) {
      std::vector<double> expanded = combine(-2.0);
      double ee = model.energy(expanded);
      if (ee < er) {
        simplex.back() = expanded;
        energies.back() = ee;
      } else {
        simplex.back() = reflected;
        energies.back() = er;
      }
    } else if (er < energies[simplex.size() - 2]) {
      simplex.back() = reflected;
      energies.back() = er;
    } else {
      std::vector<double> contracted = combine(0.5);
      double ec = model.energy(contracted);
      if (ec < energies.back()) {
        simplex.back() = contracted;
        energies.back() = ec;
      } else {
        for (std::size_t v = 1; v < simplex.size(); ++v) {
          for (std::size_t i = 0; i < n; ++i) {
            simplex[v][i] = 0.5 * (simplex[v][i] + simplex[0][i]);
          }
          energies[v] = model.energy(simplex[v]);
        }
      }
    }
    order();

    result.iterations++;
    result.trace.push_back(std::min(best, energies.front()));
    result.grad_norms.push_back(0.0);
    best = std::min(best, energies.front());
    // converged when the simplex has collapsed onto one energy level
    double spread = energies.back() - energies.front();
    if (spread < config.energy_tol && iter >= static_cast<int>(n)) break;
  }

  result.final_energy = energies.front();
  result.params = simplex.front();
  return result;
}

}  // namespace

Circuit bind_parameters(const Ansatz& ansatz, std::span<const double> values) {
  return synthesize_ansatz_baseline(ansatz, values);
}

Circuit bind_parameters_mtr(const Ansatz& ansatz,
                            std::span<const double> values,
                            const Architecture& arch, const Layout& initial,
                            Layout* final_layout) {
  CompileResult result = merge_to_root(ansatz, values, arch, initial);
  if (final_layout != nullptr) *final_layout = result.final_layout;
  return std::move(result.circuit);
}

VqeResult run_vqe(const Hamiltonian& h, const Ansatz& ansatz,
                  const VqeConfig& config) {
  if (ansatz.num_qubits() != h.num_qubits()) {
    throw_validation("SizeMismatch", "ansatz and Hamiltonian qubit counts differ");
  }
  if (ansatz.num_qubits() > kMaxVqeQubits) {
    throw_size_limit("SizeLimit", "VQE limited to " +
                                      std::to_string(kMaxVqeQubits) +
                                      " qubits");
  }
  if (config.energy_tol <= 0.0 || config.max_iters < 1) {
    throw_validation("SchemaError", "bad VQE configuration");
  }

  EnergyModel model(h, ansatz);
  std::vector<double> params(ansatz.groups().size(), 0.0);
  if (config.random_init) {
    Rng rng(config.seed);
    for (double& p : params) p = rng.uniform(-0.1, 0.1);
  }

  VqeResult result;
  if (params.empty()) {
    // nothing to optimize: the HF state energy is the answer
    result.final_energy = model.energy(params);
    result.iterations = 1;
    result.trace.push_back(result.final_energy);
    result.grad_norms.push_back(0.0);
  } else if (config.optimizer == OptimizerKind::QuasiNewton) {
    result = run_quasi_newton(model, std::move(params), config);
  } else {
    result = run_nelder_mead(model, std::move(params), config);
  }
  result.energy_evaluations = model.evals();
  return result;
}

std::vector<ConvergenceRow> convergence_compare(const Hamiltonian& h,
                                                const Ansatz& full_ansatz,
                                                std::span<const double> ratios,
                                                const VqeConfig& config) {
  double exact = exact_ground_energy(h);
  std::vector<ConvergenceRow> rows;
  for (double ratio : ratios) {
    Ansatz compressed = compress_ansatz(full_ansatz, h, ratio);
    VqeResult r = run_vqe(h, compressed, config);
    rows.push_back({ratio, compressed.num_parameters(), r.iterations,
                    r.energy_evaluations, r.final_energy,
                    r.final_energy - exact});
  }
  return rows;
}

std::string vqe_trace_csv(const VqeResult& result) {
  std::ostringstream out;
  out << "iter,energy,grad_norm\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    char e[40], g[40];
    std::snprintf(e, sizeof(e), "%.17g", result.trace[i]);
    std::snprintf(g, sizeof(g), "%.17g", result.grad_norms[i]);
    out << (i + 1) << "," << e << "," << g << "\n";
  }
  return out.str();
}

}  // namespace xtc

/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/uccsd.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>

#include "xtc/errors.hpp"

namespace xtc {

namespace {

using cd = std::complex<double>;

// Symbolic operator sum used to carry fermionic operators through the
// Jordan-Wigner encoding: a_j = Z_0 ... Z_{j-1} (X_j + iY_j)/2.
struct AlgTerm {
  cd coeff;
  std::vector<PauliOp> ops;
};
using OpSum = std::vector<AlgTerm>;

// single-qubit product a*b = phase * c
std::pair<cd, PauliOp> mul_op(PauliOp a, PauliOp b) {
  if (a == PauliOp::I) return {cd{1, 0}, b};
  if (b == PauliOp::I) return {cd{1, 0}, a};
  if (a == b) return {cd{1, 0}, PauliOp::I};
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // remaining operator index: X=1, Y=2, Z=3 sum to 6
  PauliOp c = static_cast<PauliOp>(6 - ia - ib);
  bool cyclic = (ia == 1 && ib == 2) || (ia == 2 && ib == 3) ||
                (ia == 3 && ib == 1);
  return {cyclic ? cd{0, 1} : cd{0, -1}, c};
}

OpSum ladder_operator(int num_qubits, int j, bool dagger) {
  std::vector<PauliOp> base(static_cast<std::size_t>(num_qubits), PauliOp::I);
  for (int k = 0; k < j; ++k) base[static_cast<std::size_t>(k)] = PauliOp::Z;
  AlgTerm xs{cd{0.5, 0.0}, base};
  xs.ops[static_cast<std::size_t>(j)] = PauliOp::X;
  AlgTerm ys{dagger ? cd{0.0, -0.5} : cd{0.0, 0.5}, base};
  ys.ops[static_cast<std::size_t>(j)] = PauliOp::Y;
  return {std::move(xs), std::move(ys)};
}

OpSum multiply(const OpSum& lhs, const OpSum& rhs) {
  OpSum out;
  out.reserve(lhs.size() * rhs.size());
  for (const AlgTerm& a : lhs) {
    for (const AlgTerm& b : rhs) {
      AlgTerm t;
      t.coeff = a.coeff * b.coeff;
      t.ops.resize(a.ops.size());
      for (std::size_t q = 0; q < a.ops.size(); ++q) {
        auto [phase, op] = mul_op(a.ops[q], b.ops[q]);
        t.coeff *= phase;
        t.ops[q] = op;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

OpSum subtract_adjoint(const OpSum& t) {
  // T - T+ for a sum of Pauli terms: adjoint conjugates the coefficients
  OpSum out = t;
  for (const AlgTerm& a : t) {
    out.push_back({-std::conj(a.coeff), a.ops});
  }
  return out;
}

// Collect like strings; the generator is anti-Hermitian so every surviving
// coefficient is purely imaginary. Returned group coefficients c_k satisfy
// generator = i * sum_k c_k P_k, hence exp(theta*generator) =
// exp(-i*(-theta) ... ) -- binding the group at value theta produces
// exp(-i theta sum c_k P_k) = exp(-theta * generator).
std::vector<GroupTerm> collect_group_terms(const OpSum& sum) {
  std::map<std::vector<PauliOp>, cd> acc;
  for (const AlgTerm& t : sum) acc[t.ops] += t.coeff;
  std::vector<GroupTerm> out;
  for (const auto& [ops, coeff] : acc) {
    if (std::abs(coeff) < 1e-14) continue;
    if (std::abs(coeff.real()) > 1e-12) {
      throw_validation("SchemaError",
                       "excitation generator is not anti-Hermitian");
    }
    out.push_back({PauliString(ops), -coeff.imag()});
  }
  // map keys come out in qubit-array order; re-sort by textual form so the
  // group order matches the string spelling
  std::sort(out.begin(), out.end(), [](const GroupTerm& a, const GroupTerm& b) {
    return a.string.to_text() < b.string.to_text();
  });
  return out;
}

bool alpha_block(int q, int m) { return q < m; }

void check_index(int q, int n) {
  if (q < 0 || q >= n) {
    throw_validation("IndexOutOfRange",
                     "spin-orbital " + std::to_string(q) + " out of range [0, " +
                         std::to_string(n) + ")");
  }
}

}  // namespace

void ActiveSpace::validate() const {
  if (num_spin_orbitals <= 0 || num_spin_orbitals % 2 != 0) {
    throw_validation("IndexOutOfRange",
                     "spin-orbital count must be positive and even");
  }
  if (num_electrons <= 0 || num_electrons % 2 != 0) {
    throw_validation("IndexOutOfRange",
                     "electron count must be positive and even");
  }
  if (num_electrons >= num_spin_orbitals) {
    throw_validation("IndexOutOfRange",
                     "need more spin orbitals than electrons");
  }
}

ParameterGroup single_excitation_group(int num_qubits, int p, int q,
                                       int param_id) {
  if (num_qubits <= 0 || num_qubits % 2 != 0) {
    throw_validation("IndexOutOfRange", "qubit count must be positive and even");
  }
  check_index(p, num_qubits);
  check_index(q, num_qubits);
  if (p >= q) {
    throw_validation("IndexOutOfRange",
                     "occupied index must be below virtual index");
  }
  int m = num_qubits / 2;
  if (alpha_block(p, m) != alpha_block(q, m)) {
    throw_validation("SpinBlockViolation",
                     "single excitation must stay in one spin block");
  }
  OpSum gen = subtract_adjoint(multiply(ladder_operator(num_qubits, q, true),
                                        ladder_operator(num_qubits, p, false)));
  return ParameterGroup{param_id, collect_group_terms(gen)};
}

ParameterGroup double_excitation_group(int num_qubits, int p, int q, int r,
                                       int s, int param_id) {
  if (num_qubits <= 0 || num_qubits % 2 != 0) {
    throw_validation("IndexOutOfRange", "qubit count must be positive and even");
  }
  for (int idx : {p, q, r, s}) check_index(idx, num_qubits);
  std::array<int, 4> all{p, q, r, s};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw_validation("IndexOutOfRange",
                     "excitation indices must be distinct");
  }
  int m = num_qubits / 2;
  int occupied_alpha = (alpha_block(p, m) ? 1 : 0) + (alpha_block(q, m) ? 1 : 0);
  int virtual_alpha = (alpha_block(r, m) ? 1 : 0) + (alpha_block(s, m) ? 1 : 0);
  if (occupied_alpha != virtual_alpha) {
    throw_validation("SpinBlockViolation",
                     "double excitation must conserve spin");
  }
  OpSum t = multiply(
      multiply(ladder_operator(num_qubits, r, true),
               ladder_operator(num_qubits, s, true)),
      multiply(ladder_operator(num_qubits, q, false),
               ladder_operator(num_qubits, p, false)));
  return ParameterGroup{param_id, collect_group_terms(subtract_adjoint(t))};
}

Ansatz generate_uccsd(const ActiveSpace& space) {
  space.validate();
  const int m = space.num_spatial();
  const int n = space.num_spin_orbitals;
  const int occ = space.occupied_per_block();

  std::vector<ParameterGroup> groups;
  int param_id = 0;

  // singles: alpha block first (lower indices), lexicographic (p, q)
  for (int block = 0; block < 2; ++block) {
    int base = block * m;
    for (int p = 0; p < occ; ++p) {
      for (int q = occ; q < m; ++q) {
        groups.push_back(
            single_excitation_group(n, base + p, base + q, param_id++));
      }
    }
  }

  // doubles: same-spin pairs and alpha-beta pairs, lexicographic (p,q,r,s)
  std::vector<std::array<int, 4>> doubles;
  for (int block = 0; block < 2; ++block) {
    int base = block * m;
    for (int p1 = 0; p1 < occ; ++p1) {
      for (int p2 = p1 + 1; p2 < occ; ++p2) {
        for (int r1 = occ; r1 < m; ++r1) {
          for (int r2 = r1 + 1; r2 < m; ++r2) {
            doubles.push_back(
                {base + p1, base + p2, base + r1, base + r2});
          }
        }
      }
    }
  }
  for (int pa = 0; pa < occ; ++pa) {
    for (int qb = 0; qb < occ; ++qb) {
      for (int ra = occ; ra < m; ++ra) {
        for (int sb = occ; sb < m; ++sb) {
          doubles.push_back({pa, m + qb, ra, m + sb});
        }
      }
    }
  }
  std::sort(doubles.begin(), doubles.end());
  for (const auto& [p, q, r, s] : doubles) {
    groups.push_back(double_excitation_group(n, p, q, r, s, param_id++));
  }

  std::vector<int> hf;
  for (int p = 0; p < occ; ++p) hf.push_back(p);
  for (int p = 0; p < occ; ++p) hf.push_back(m + p);
  return Ansatz(n, std::move(groups), std::move(hf));
}

UccsdCounts uccsd_counts(const ActiveSpace& space) {
  space.validate();
  long o = space.occupied_per_block();
  long v = space.virtual_per_block();
  auto choose2 = [](long k) { return k * (k - 1) / 2; };
  UccsdCounts c{};
  c.singles = 2 * o * v;
  c.doubles = 2 * choose2(o) * choose2(v) + o * o * v * v;
  c.parameters = c.singles + c.doubles;
  c.pauli_strings = 2 * c.singles + 8 * c.doubles;
  return c;
}

}  // namespace xtc

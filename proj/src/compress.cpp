/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/compress.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "xtc/errors.hpp"
#include "xtc/rng.hpp"

namespace xtc {

int decay_distance(const PauliString& pa, const PauliString& ph) {
  if (pa.num_qubits() != ph.num_qubits()) {
    throw_validation("LengthMismatch",
                     "strings have " + std::to_string(pa.num_qubits()) +
                         " and " + std::to_string(ph.num_qubits()) + " qubits");
  }
  int d = 0;
  for (int q = 0; q < pa.num_qubits(); ++q) {
    PauliOp a = pa.op(q);
    PauliOp h = ph.op(q);
    if (a == PauliOp::I || h == PauliOp::I || a == h) ++d;
  }
  return d;
}

double parameter_importance(const ParameterGroup& group, const Hamiltonian& h) {
  double score = 0.0;
  for (const GroupTerm& term : group.terms) {
    for (const HamiltonianTerm& ht : h.terms()) {
      int d = decay_distance(term.string, ht.string);
      score += std::ldexp(std::abs(ht.weight), -d);  // 2^-d * |w|
    }
  }
  return score;
}

ImportanceReport importance_report(const Ansatz& ansatz, const Hamiltonian& h) {
  if (ansatz.num_qubits() != h.num_qubits()) {
    throw_validation("LengthMismatch",
                     "ansatz and Hamiltonian qubit counts differ");
  }
  ImportanceReport report;
  for (const ParameterGroup& g : ansatz.groups()) {
    report.param_ids.push_back(g.param_id);
    report.scores.push_back(parameter_importance(g, h));
  }
  std::vector<std::size_t> order(report.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.scores[a] > report.scores[b];
  });
  for (std::size_t i : order) report.ranking.push_back(report.param_ids[i]);
  return report;
}

namespace {

std::size_t retained_count(std::size_t total, double ratio) {
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw_validation("RatioOutOfRange",
                     "compression ratio must lie in (0, 1]");
  }
  return static_cast<std::size_t>(
      std::ceil(ratio * static_cast<double>(total)));
}

}  // namespace

Ansatz compress_ansatz(const Ansatz& ansatz, const Hamiltonian& h,
                       double ratio) {
  if (ansatz.groups().empty()) {
    throw_validation("EmptyAnsatz", "cannot compress an empty ansatz");
  }
  std::size_t keep = retained_count(ansatz.groups().size(), ratio);
  ImportanceReport report = importance_report(ansatz, h);

  std::vector<std::size_t> order(report.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.scores[a] > report.scores[b];
  });
  std::vector<ParameterGroup> groups;
  groups.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    groups.push_back(ansatz.groups()[order[i]]);
  }
  return Ansatz(ansatz.num_qubits(), std::move(groups),
                ansatz.hf_occupations());
}

Ansatz random_compress(const Ansatz& ansatz, double ratio, std::uint64_t seed) {
  if (ansatz.groups().empty()) {
    throw_validation("EmptyAnsatz", "cannot compress an empty ansatz");
  }
  std::size_t total = ansatz.groups().size();
  std::size_t keep = retained_count(total, ratio);

  // partial Fisher-Yates over the index vector, first `keep` drawn uniformly
  std::vector<std::size_t> index(total);
  std::iota(index.begin(), index.end(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < keep; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.bounded(total - i));
    std::swap(index[i], index[j]);
  }
  index.resize(keep);
  std::sort(index.begin(), index.end());  // original order

  std::vector<ParameterGroup> groups;
  groups.reserve(keep);
  for (std::size_t i : index) groups.push_back(ansatz.groups()[i]);
  return Ansatz(ansatz.num_qubits(), std::move(groups),
                ansatz.hf_occupations());
}

std::string importance_csv(const ImportanceReport& report) {
  std::ostringstream out;
  out << "param_id,score,rank\n";
  // rank of each param_id
  std::vector<std::pair<int, int>> ranks;  // (param_id, rank)
  for (std::size_t r = 0; r < report.ranking.size(); ++r) {
    ranks.emplace_back(report.ranking[r], static_cast<int>(r) + 1);
  }
  for (std::size_t i = 0; i < report.param_ids.size(); ++i) {
    int rank = 0;
    for (const auto& [pid, rk] : ranks) {
      if (pid == report.param_ids[i]) {
        rank = rk;
        break;
      }
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", report.scores[i]);
    out << report.param_ids[i] << "," << buf << "," << rank << "\n";
  }
  return out.str();
}

}  // namespace xtc

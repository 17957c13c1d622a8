/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xtc/compress.hpp"
#include "xtc/errors.hpp"
#include "xtc/layout.hpp"
#include "xtc/rng.hpp"
#include "xtc/route.hpp"
#include "xtc/synthesis.hpp"

namespace xtc {

std::vector<BenchSpace> default_bench_spaces() {
  return {
      {"H2", {4, 2}},   {"LiH", {6, 2}},   {"NaH", {8, 2}},
      {"HF", {10, 2}},  {"BeH2", {12, 4}}, {"H2O", {12, 4}},
      {"BH3", {14, 6}}, {"NH3", {14, 6}},  {"CH4", {16, 8}},
  };
}

Hamiltonian synthetic_hamiltonian(const Ansatz& ansatz, std::uint64_t seed) {
  std::set<PauliString> distinct;
  for (const PauliString& p : ansatz_strings(ansatz)) distinct.insert(p);
  Rng rng(seed);
  std::vector<HamiltonianTerm> terms;
  for (const PauliString& p : distinct) {
    terms.push_back({p, rng.uniform(-1.0, 1.0)});
  }
  return Hamiltonian(ansatz.num_qubits(), std::move(terms));
}

std::string table1_csv(std::span<const BenchSpace> spaces) {
  std::ostringstream out;
  out << "molecule,qubits,pauli,params,gates,cnots\n";
  for (const BenchSpace& bs : spaces) {
    Ansatz ansatz = generate_uccsd(bs.space);
    long pauli = 0;
    for (const ParameterGroup& g : ansatz.groups()) {
      pauli += static_cast<long>(g.terms.size());
    }
    Circuit circuit = synthesize_ansatz_baseline(ansatz, 1.0);
    out << bs.label << "," << bs.space.num_spin_orbitals << "," << pauli << ","
        << ansatz.num_parameters() << "," << circuit.total_gates() << ","
        << circuit.cnot_count_expanded() << "\n";
  }
  return out.str();
}

std::vector<Table2Cell> table2_cells(std::span<const BenchSpace> spaces,
                                     std::span<const double> ratios,
                                     const Architecture& tree,
                                     const Architecture& grid,
                                     std::uint64_t seed,
                                     std::span<const Hamiltonian> scoring_in) {
  if (!scoring_in.empty() && scoring_in.size() != spaces.size()) {
    throw_validation("SchemaError",
                     "need one scoring Hamiltonian per space");
  }
  // one task per (space, ratio) cell; all shared inputs are immutable, and
  // rows are assembled in canonical order no matter when tasks finish
  std::vector<Ansatz> full;
  std::vector<Hamiltonian> scoring;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    full.push_back(generate_uccsd(spaces[s].space));
    scoring.push_back(scoring_in.empty()
                          ? synthetic_hamiltonian(full.back(), seed)
                          : scoring_in[s]);
  }
  auto run_cell = [&](std::size_t s, double ratio) -> Table2Cell {
    Ansatz compressed = compress_ansatz(full[s], scoring[s], ratio);
    std::vector<PauliString> strings = ansatz_strings(compressed);
    Circuit logical = synthesize_ansatz_baseline(compressed, 1.0);

    Layout tree_layout = hierarchical_layout(strings, tree);
    CompileResult mtr = merge_to_root(compressed, tree, tree_layout, 1.0);
    CompileResult sab_tree = baseline_route(logical, tree, tree_layout);
    Layout grid_layout =
        Layout::trivial(compressed.num_qubits(), grid.num_qubits());
    CompileResult sab_grid = baseline_route(logical, grid, grid_layout);

    return {spaces[s].label, spaces[s].space.num_spin_orbitals, ratio,
            mtr.stats.original_cnots, mtr.stats.added_cnots,
            sab_tree.stats.added_cnots, sab_grid.stats.added_cnots};
  };

  std::vector<std::future<Table2Cell>> futures;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    for (double ratio : ratios) {
      futures.push_back(
          std::async(std::launch::async, run_cell, s, ratio));
    }
  }
  std::vector<Table2Cell> cells;
  cells.reserve(futures.size());
  for (auto& f : futures) cells.push_back(f.get());
  return cells;
}

std::string table2_csv(std::span<const Table2Cell> cells, std::uint64_t seed,
                       bool synthetic) {
  std::ostringstream out;
  if (synthetic) {
    out << "# scoring hamiltonian: synthetic, seed=" << seed << "\n";
  } else {
    out << "# scoring hamiltonian: user-supplied\n";
  }
  out << "molecule,qubits,ratio,original_cnots,mtr_added,baseline_tree_added,"
         "baseline_grid_added\n";
  for (const Table2Cell& c : cells) {
    char ratio[32];
    std::snprintf(ratio, sizeof(ratio), "%g", c.ratio);
    out << c.label << "," << c.qubits << "," << ratio << ","
        << c.original_cnots << "," << c.mtr_added << ","
        << c.baseline_tree_added << "," << c.baseline_grid_added << "\n";
  }
  return out.str();
}

std::string arch_report(std::span<const Architecture> archs,
                        std::span<const std::string> names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < archs.size(); ++i) {
    const Architecture& a = archs[i];
    out << names[i] << ": " << a.num_qubits() << " qubits, "
        << a.connection_count() << " connections"
        << (a.is_tree() ? " (tree)" : "") << "\n";
    out << "  degree histogram:";
    for (const auto& [degree, count] : a.degree_histogram()) {
      out << " " << degree << "x" << count;
    }
    out << "\n";
    long sum = 0, pairs = 0;
    int diameter = 0;
    for (int u = 0; u < a.num_qubits(); ++u) {
      for (int v = u + 1; v < a.num_qubits(); ++v) {
        int d = a.distance(u, v);
        sum += d;
        ++pairs;
        diameter = std::max(diameter, d);
      }
    }
    char mean[32];
    std::snprintf(mean, sizeof(mean), "%.4f",
                  static_cast<double>(sum) / static_cast<double>(pairs));
    out << "  distances: mean " << mean << ", diameter " << diameter << "\n";
    if (a.is_tree()) {
      std::map<int, int> per_level;
      for (int q = 0; q < a.num_qubits(); ++q) per_level[a.level(q)]++;
      out << "  levels:";
      for (const auto& [level, count] : per_level) {
        out << " " << level << "x" << count;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string table_to_format(const std::string& csv, const std::string& format) {
  if (format == "csv") return csv;
  if (format != "json") {
    throw_validation("SchemaError", "unknown format: " + format);
  }
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  nlohmann::json meta = nlohmann::json::array();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      meta.push_back(line.substr(1));
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (header.empty()) {
      header = fields;
      continue;
    }
    nlohmann::json row;
    for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i) {
      row[header[i]] = fields[i];
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc{{"rows", std::move(rows)}};
  if (!meta.empty()) doc["notes"] = std::move(meta);
  return doc.dump(2) + "\n";
}

}  // namespace xtc

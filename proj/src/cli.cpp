/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xtc/bench.hpp"
#include "xtc/compress.hpp"
#include "xtc/errors.hpp"
#include "xtc/layout.hpp"
#include "xtc/route.hpp"
#include "xtc/simulator.hpp"
#include "xtc/synthesis.hpp"
#include "xtc/uccsd.hpp"
#include "xtc/vqe.hpp"

namespace xtc {

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw_validation("SchemaError", "cannot write " + path);
  out << text;
}

Architecture resolve_architecture(const std::string& name_or_path) {
  for (const char* name : {"XTree5Q", "XTree8Q", "XTree17Q", "XTree26Q"}) {
    if (name_or_path == name) return make_architecture(name);
  }
  return load_architecture(name_or_path);
}

std::vector<BenchSpace> parse_spaces(const std::string& text) {
  if (text.empty()) return default_bench_spaces();
  std::vector<BenchSpace> out;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ';')) {
    int n = 0, eta = 0;
    if (std::sscanf(chunk.c_str(), "%d,%d", &n, &eta) != 2) {
      throw_validation("SchemaError", "bad space spec: " + chunk);
    }
    out.push_back({"n" + std::to_string(n) + "e" + std::to_string(eta),
                   ActiveSpace{n, eta}});
  }
  // reuse molecule labels when a space matches a benchmark row
  for (BenchSpace& bs : out) {
    for (const BenchSpace& known : default_bench_spaces()) {
      if (known.space.num_spin_orbitals == bs.space.num_spin_orbitals &&
          known.space.num_electrons == bs.space.num_electrons) {
        bs.label = known.label;
        break;
      }
    }
  }
  return out;
}

std::vector<double> parse_ratios(const std::string& text) {
  if (text.empty()) return {0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> out;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, ',')) {
    out.push_back(std::stod(chunk));
  }
  return out;
}

std::string stats_json(const CompileStats& stats) {
  nlohmann::json doc{{"original_cnots", stats.original_cnots},
                     {"swaps", stats.added_swap_count},
                     {"added_cnots", stats.added_cnots},
                     {"total_cnots", stats.total_cnots}};
  return doc.dump(2) + "\n";
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Pauli-string compiler toolchain for variational quantum "
               "chemistry on X-Tree architectures"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", seed, "Seed for randomized steps");
  app.add_option("--out", out_path, "Output file (stdout when omitted)");
  app.add_option("--format", format, "Tabular output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // gen-uccsd
  auto* gen = app.add_subcommand("gen-uccsd", "Generate a UCCSD ansatz");
  int orbitals = 0, electrons = 0;
  gen->add_option("--orbitals", orbitals, "Spin-orbital count")->required();
  gen->add_option("--electrons", electrons, "Electron count")->required();

  // compress
  auto* cmp = app.add_subcommand("compress", "Importance-compress an ansatz");
  std::string cmp_hamiltonian, cmp_ansatz, cmp_report;
  double cmp_ratio = 0.5;
  bool cmp_random = false;
  cmp->add_option("--hamiltonian", cmp_hamiltonian, "Hamiltonian JSON")
      ->required();
  cmp->add_option("--ansatz", cmp_ansatz, "Ansatz JSON")->required();
  cmp->add_option("--ratio", cmp_ratio, "Compression ratio in (0,1]")
      ->required();
  cmp->add_option("--report", cmp_report, "Importance report CSV path");
  cmp->add_flag("--random", cmp_random, "Random selection instead of scores");

  // compile
  auto* comp = app.add_subcommand("compile", "Synthesize and route an ansatz");
  std::string comp_ansatz, comp_arch, comp_method = "mtr",
              comp_layout = "hier", comp_stats;
  double comp_value = 1.0;
  comp->add_option("--ansatz", comp_ansatz, "Ansatz JSON")->required();
  comp->add_option("--arch", comp_arch, "Architecture name or JSON file")
      ->required();
  comp->add_option("--method", comp_method, "mtr|baseline")
      ->check(CLI::IsMember({"mtr", "baseline"}));
  comp->add_option("--layout", comp_layout, "hier|trivial")
      ->check(CLI::IsMember({"hier", "trivial"}));
  comp->add_option("--stats", comp_stats, "Stats JSON path");
  comp->add_option("--value", comp_value, "Parameter value bound to groups");

  // emit-qasm
  auto* emit = app.add_subcommand("emit-qasm",
                                  "Chain-synthesize an ansatz to OpenQASM");
  std::string emit_ansatz;
  double emit_value = 1.0;
  emit->add_option("--ansatz", emit_ansatz, "Ansatz JSON")->required();
  emit->add_option("--value", emit_value, "Parameter value bound to groups");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Run a QASM file on the "
                                             "statevector simulator");
  std::string sim_qasm, sim_hamiltonian;
  sim->add_option("--qasm", sim_qasm, "OpenQASM 2.0 file")->required();
  sim->add_option("--hamiltonian", sim_hamiltonian,
                  "Hamiltonian JSON for an energy readout");

  // vqe
  auto* vqe = app.add_subcommand("vqe", "Run the VQE outer loop");
  std::string vqe_hamiltonian, vqe_ansatz, vqe_optimizer = "qn",
              vqe_result_path;
  double vqe_ratio = 1.0, vqe_tol = 1e-6;
  int vqe_max_iters = 500;
  bool vqe_random_init = false;
  vqe->add_option("--hamiltonian", vqe_hamiltonian, "Hamiltonian JSON")
      ->required();
  vqe->add_option("--ansatz", vqe_ansatz, "Ansatz JSON")->required();
  vqe->add_option("--ratio", vqe_ratio, "Compression ratio in (0,1]");
  vqe->add_option("--optimizer", vqe_optimizer, "qn|nm")
      ->check(CLI::IsMember({"qn", "nm"}));
  vqe->add_option("--tol", vqe_tol, "Energy-change stopping tolerance");
  vqe->add_option("--max-iters", vqe_max_iters, "Iteration cap");
  vqe->add_flag("--random-init", vqe_random_init, "Seeded random start");
  vqe->add_option("--result", vqe_result_path, "Summary JSON path");

  // table1
  auto* t1 = app.add_subcommand("table1", "Structure-count table");
  std::string t1_spaces;
  t1->add_option("--spaces", t1_spaces, "Semicolon list like \"4,2;6,2\"");

  // table2
  auto* t2 = app.add_subcommand("table2", "Mapping-overhead table");
  std::string t2_spaces, t2_ratios, t2_arch = "XTree17Q", t2_grid;
  std::vector<std::string> t2_hamiltonians;
  t2->add_option("--spaces", t2_spaces, "Semicolon list like \"4,2;6,2\"");
  t2->add_option("--ratios", t2_ratios, "Comma list like \"0.1,0.5\"");
  t2->add_option("--arch", t2_arch, "Tree architecture name or file");
  t2->add_option("--grid", t2_grid, "Grid architecture JSON file")->required();
  t2->add_option("--hamiltonians", t2_hamiltonians,
                 "Scoring Hamiltonian JSON per space (synthetic if omitted)");

  // arch-report
  auto* rep = app.add_subcommand("arch-report", "Architecture metrics");
  std::vector<std::string> rep_archs;
  rep->add_option("--arch", rep_archs, "Architecture names or files")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    Ansatz ansatz = generate_uccsd(ActiveSpace{orbitals, electrons});
    write_output(out_path, ansatz_to_json_text(ansatz));
    return 0;
  }

  if (cmp->parsed()) {
    Hamiltonian h = load_hamiltonian(cmp_hamiltonian);
    Ansatz ansatz = load_ansatz(cmp_ansatz);
    Ansatz compressed = cmp_random
                            ? random_compress(ansatz, cmp_ratio, seed)
                            : compress_ansatz(ansatz, h, cmp_ratio);
    if (!cmp_report.empty()) {
      write_output(cmp_report, importance_csv(importance_report(ansatz, h)));
    }
    write_output(out_path, ansatz_to_json_text(compressed));
    return 0;
  }

  if (comp->parsed()) {
    Ansatz ansatz = load_ansatz(comp_ansatz);
    Architecture arch = resolve_architecture(comp_arch);
    Layout layout =
        comp_layout == "hier"
            ? hierarchical_layout(ansatz_strings(ansatz), arch)
            : Layout::trivial(ansatz.num_qubits(), arch.num_qubits());
    CompileResult result =
        comp_method == "mtr"
            ? merge_to_root(ansatz, arch, layout, comp_value)
            : baseline_route(synthesize_ansatz_baseline(ansatz, comp_value),
                             arch, layout);
    if (!comp_stats.empty()) write_output(comp_stats, stats_json(result.stats));
    write_output(out_path, emit_qasm(result.circuit));
    return 0;
  }

  if (emit->parsed()) {
    Ansatz ansatz = load_ansatz(emit_ansatz);
    write_output(out_path, emit_qasm(synthesize_ansatz_baseline(ansatz, emit_value)));
    return 0;
  }

  if (sim->parsed()) {
    std::ifstream in(sim_qasm);
    if (!in) throw_validation("SchemaError", "cannot open " + sim_qasm);
    std::ostringstream buf;
    buf << in.rdbuf();
    Circuit circuit = parse_qasm(buf.str());
    StateVector state = StateVector::zero_state(circuit.num_qubits());
    state.apply(circuit);
    nlohmann::json doc{{"num_qubits", circuit.num_qubits()},
                       {"gates", circuit.total_gates()},
                       {"norm", state.norm()}};
    if (!sim_hamiltonian.empty()) {
      doc["energy"] = energy(state, load_hamiltonian(sim_hamiltonian));
    }
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
  }

  if (vqe->parsed()) {
    Hamiltonian h = load_hamiltonian(vqe_hamiltonian);
    Ansatz ansatz = load_ansatz(vqe_ansatz);
    if (vqe_ratio < 1.0) ansatz = compress_ansatz(ansatz, h, vqe_ratio);
    VqeConfig config;
    config.optimizer = vqe_optimizer == "qn" ? OptimizerKind::QuasiNewton
                                             : OptimizerKind::NelderMead;
    config.energy_tol = vqe_tol;
    config.max_iters = vqe_max_iters;
    config.random_init = vqe_random_init;
    config.seed = seed;
    VqeResult result = run_vqe(h, ansatz, config);
    if (!vqe_result_path.empty()) {
      nlohmann::json doc{{"final_energy", result.final_energy},
                         {"iterations", result.iterations},
                         {"energy_evaluations", result.energy_evaluations},
                         {"params", result.params}};
      write_output(vqe_result_path, doc.dump(2) + "\n");
    }
    write_output(out_path, vqe_trace_csv(result));
    return 0;
  }

  if (t1->parsed()) {
    std::vector<BenchSpace> spaces = parse_spaces(t1_spaces);
    write_output(out_path, table_to_format(table1_csv(spaces), format));
    return 0;
  }

  if (t2->parsed()) {
    std::vector<BenchSpace> spaces = parse_spaces(t2_spaces);
    std::vector<double> ratios = parse_ratios(t2_ratios);
    Architecture tree = resolve_architecture(t2_arch);
    Architecture grid = resolve_architecture(t2_grid);
    std::vector<Hamiltonian> scoring;
    for (const std::string& path : t2_hamiltonians) {
      scoring.push_back(load_hamiltonian(path));
    }
    auto cells = table2_cells(spaces, ratios, tree, grid, seed, scoring);
    write_output(out_path, table_to_format(
                               table2_csv(cells, seed, scoring.empty()),
                               format));
    return 0;
  }

  if (rep->parsed()) {
    std::vector<Architecture> archs;
    for (const std::string& name : rep_archs) {
      archs.push_back(resolve_architecture(name));
    }
    write_output(out_path, arch_report(archs, rep_archs));
    return 0;
  }

  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeLimit ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace xtc

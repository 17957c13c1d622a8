/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/route.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "xtc/errors.hpp"

namespace xtc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void check_layout(const Layout& layout, int num_logical,
                  const Architecture& arch) {
  if (layout.num_logical() != num_logical ||
      layout.num_physical() != arch.num_qubits()) {
    throw_validation("LayoutMismatch",
                     "layout does not match the program and architecture");
  }
  if (!layout.is_complete()) {
    throw_validation("LayoutMismatch", "layout leaves logical qubits unplaced");
  }
}

struct BoundString {
  const PauliString* string;
  double rz_angle;
};

long chain_cnot_count(const PauliString& p) {
  int w = p.weight();
  return w >= 1 ? 2L * (w - 1) : 0L;
}

}  // namespace

CompileResult merge_to_root(const Ansatz& ansatz,
                            std::span<const double> values,
                            const Architecture& arch, const Layout& initial) {
  if (!arch.is_tree()) {
    throw_validation("NotATree", "merge-to-root requires a tree architecture");
  }
  if (values.size() != ansatz.groups().size()) {
    throw_validation("ArityMismatch",
                     "got " + std::to_string(values.size()) + " values for " +
                         std::to_string(ansatz.groups().size()) + " groups");
  }
  if (ansatz.num_qubits() > arch.num_qubits()) {
    throw_validation("CapacityExceeded",
                     "program does not fit on the architecture");
  }
  check_layout(initial, ansatz.num_qubits(), arch);

  std::vector<BoundString> items;
  for (std::size_t g = 0; g < ansatz.groups().size(); ++g) {
    for (const GroupTerm& term : ansatz.groups()[g].terms) {
      items.push_back({&term.string, 2.0 * values[g] * term.coeff});
    }
  }

  // occurrences of each logical qubit in the strings after position i
  const int n_logical = ansatz.num_qubits();
  std::vector<std::vector<long>> occ_after(items.size() + 1,
                                           std::vector<long>(
                                               static_cast<std::size_t>(n_logical), 0));
  for (std::size_t i = items.size(); i-- > 0;) {
    occ_after[i] = occ_after[i + 1];
    for (int q : items[i].string->support()) {
      occ_after[i][static_cast<std::size_t>(q)]++;
    }
  }

  Layout layout = initial;
  Circuit circuit(arch.num_qubits());
  CompileStats stats;

  std::vector<int> occupations = ansatz.hf_occupations();
  std::sort(occupations.begin(), occupations.end());
  for (int q : occupations) circuit.append(Gate::x(layout.physical_of(q)));

  std::vector<char> active(static_cast<std::size_t>(arch.num_qubits()), 0);

  for (std::size_t i = 0; i < items.size(); ++i) {
    const PauliString& p = *items[i].string;
    std::vector<int> support = p.support();
    stats.original_cnots += chain_cnot_count(p);
    long swaps_before = stats.added_swap_count;
    if (support.empty()) {  // global phase only
      stats.swaps_per_string.push_back(0);
      continue;
    }

    for (int l : support) {
      int phys = layout.physical_of(l);
      if (p.op(l) == PauliOp::X) circuit.append(Gate::h(phys));
      if (p.op(l) == PauliOp::Y) circuit.append(Gate::rx(phys, kHalfPi));
    }

    std::fill(active.begin(), active.end(), 0);
    int active_count = 0;
    for (int l : support) {
      active[static_cast<std::size_t>(layout.physical_of(l))] = 1;
      ++active_count;
    }

    // left CNOT tree, leaves toward the root
    std::vector<std::pair<int, int>> logical_edges;  // child -> parent
    for (int level = arch.num_levels() - 1; level >= 1; --level) {
      if (active_count == 1) break;
      // move one active child into every inactive parent slot that blocks
      // an active qubit at this level
      for (int u : arch.qubits_at_level(level)) {
        if (!active[static_cast<std::size_t>(u)]) continue;
        int par = arch.parent(u);
        if (active[static_cast<std::size_t>(par)]) continue;
        int best_phys = -1;
        int best_logical = -1;
        long best_count = -1;
        for (int c : arch.children(par)) {
          if (!active[static_cast<std::size_t>(c)]) continue;
          int lc = layout.logical_at(c);
          long count = occ_after[i + 1][static_cast<std::size_t>(lc)];
          if (count > best_count ||
              (count == best_count && lc < best_logical)) {
            best_count = count;
            best_logical = lc;
            best_phys = c;
          }
        }
        circuit.append(Gate::swap(best_phys, par));
        layout.swap_physical(best_phys, par);
        active[static_cast<std::size_t>(best_phys)] = 0;
        active[static_cast<std::size_t>(par)] = 1;
        stats.added_swap_count++;
      }
      // merge every remaining active qubit of this level into its parent
      for (int u : arch.qubits_at_level(level)) {
        if (!active[static_cast<std::size_t>(u)]) continue;
        int par = arch.parent(u);
        circuit.append(Gate::cnot(u, par));
        logical_edges.emplace_back(layout.logical_at(u),
                                   layout.logical_at(par));
        active[static_cast<std::size_t>(u)] = 0;
        --active_count;
      }
    }

    int center = -1;
    for (int q = 0; q < arch.num_qubits(); ++q) {
      if (active[static_cast<std::size_t>(q)]) center = q;
    }
    circuit.append(Gate::rz(center, items[i].rz_angle));

    // right CNOT tree: replay the merge edges in reverse on the logical
    // operands' current positions, routing when an operand has moved
    for (auto it = logical_edges.rbegin(); it != logical_edges.rend(); ++it) {
      int pc = layout.physical_of(it->first);
      int pp = layout.physical_of(it->second);
      while (arch.distance(pc, pp) > 1) {
        int hop = arch.next_hop(pc, pp);
        circuit.append(Gate::swap(pc, hop));
        layout.swap_physical(pc, hop);
        stats.added_swap_count++;
        pc = hop;
      }
      circuit.append(Gate::cnot(pc, pp));
    }

    for (auto it = support.rbegin(); it != support.rend(); ++it) {
      int phys = layout.physical_of(*it);
      if (p.op(*it) == PauliOp::X) circuit.append(Gate::h(phys));
      if (p.op(*it) == PauliOp::Y) circuit.append(Gate::rx(phys, -kHalfPi));
    }

    stats.swaps_per_string.push_back(stats.added_swap_count - swaps_before);
  }

  stats.added_cnots = 3 * stats.added_swap_count;
  stats.total_cnots = stats.original_cnots + stats.added_cnots;
  return CompileResult{std::move(circuit), std::move(stats), layout};
}

CompileResult merge_to_root(const Ansatz& ansatz, const Architecture& arch,
                            const Layout& initial, double value) {
  std::vector<double> values(ansatz.groups().size(), value);
  return merge_to_root(ansatz, values, arch, initial);
}

CompileResult baseline_route(const Circuit& logical, const Architecture& arch,
                             const Layout& initial) {
  if (logical.num_qubits() > arch.num_qubits()) {
    throw_validation("CapacityExceeded",
                     "program does not fit on the architecture");
  }
  check_layout(initial, logical.num_qubits(), arch);

  const std::vector<Gate>& gates = logical.gates();
  const std::size_t num_gates = gates.size();

  // dependency edges via the previous gate on each qubit
  std::vector<std::vector<std::size_t>> successors(num_gates);
  std::vector<int> pending(num_gates, 0);
  {
    std::vector<int> last(static_cast<std::size_t>(logical.num_qubits()), -1);
    for (std::size_t g = 0; g < num_gates; ++g) {
      auto link = [&](int q) {
        if (last[static_cast<std::size_t>(q)] >= 0) {
          successors[static_cast<std::size_t>(
                         last[static_cast<std::size_t>(q)])]
              .push_back(g);
          pending[g]++;
        }
        last[static_cast<std::size_t>(q)] = static_cast<int>(g);
      };
      link(gates[g].q0);
      if (gates[g].is_two_qubit()) link(gates[g].q1);
    }
  }

  std::vector<std::size_t> frontier;
  for (std::size_t g = 0; g < num_gates; ++g) {
    if (pending[g] == 0) frontier.push_back(g);
  }
  std::vector<char> executed(num_gates, 0);

  Layout layout = initial;
  Circuit routed(arch.num_qubits());
  CompileStats stats;
  stats.original_cnots = logical.cnot_count_expanded();

  int diameter = 0;
  for (int u = 0; u < arch.num_qubits(); ++u) {
    for (int v = 0; v < arch.num_qubits(); ++v) {
      diameter = std::max(diameter, arch.distance(u, v));
    }
  }
  const long stall_limit = 3L * diameter + 8;
  long stalled = 0;
  std::pair<int, int> last_swap{-1, -1};

  auto emit_mapped = [&](const Gate& g) {
    Gate mapped = g;
    mapped.q0 = layout.physical_of(g.q0);
    if (g.is_two_qubit()) mapped.q1 = layout.physical_of(g.q1);
    routed.append(mapped);
  };

  auto retire = [&](std::size_t g) {
    executed[g] = 1;
    frontier.erase(std::find(frontier.begin(), frontier.end(), g));
    for (std::size_t succ : successors[g]) {
      if (--pending[succ] == 0) frontier.push_back(succ);
    }
    std::sort(frontier.begin(), frontier.end());
    stalled = 0;
    last_swap = {-1, -1};
  };

  auto insert_swap = [&](int a, int b) {
    routed.append(Gate::swap(a, b));
    layout.swap_physical(a, b);
    stats.added_swap_count++;
  };

  std::size_t done = 0;
  std::size_t scan_base = 0;  // first not-yet-executed gate, monotone
  while (done < num_gates) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
        std::size_t g = frontier[idx];
        const Gate& gate = gates[g];
        bool ok = !gate.is_two_qubit() ||
                  arch.adjacent(layout.physical_of(gate.q0),
                                layout.physical_of(gate.q1));
        if (ok) {
          emit_mapped(gate);
          retire(g);
          ++done;
          progress = true;
          break;  // frontier changed, restart the scan
        }
      }
    }
    if (done == num_gates) break;

    // stuck on two-qubit gates; the guard forces the lowest-index frontier
    // gate through when greedy swapping stops paying off
    if (stalled >= stall_limit) {
      std::size_t g = frontier.front();
      int pc = layout.physical_of(gates[g].q0);
      int pt = layout.physical_of(gates[g].q1);
      while (arch.distance(pc, pt) > 1) {
        int hop = arch.next_hop(pc, pt);
        insert_swap(pc, hop);
        pc = hop;
      }
      emit_mapped(gates[g]);
      retire(g);
      ++done;
      continue;
    }

    // candidate swaps: architecture edges touching a frontier operand
    std::vector<char> hot(static_cast<std::size_t>(arch.num_qubits()), 0);
    for (std::size_t g : frontier) {
      hot[static_cast<std::size_t>(layout.physical_of(gates[g].q0))] = 1;
      hot[static_cast<std::size_t>(layout.physical_of(gates[g].q1))] = 1;
    }
    // lookahead: the next 20 two-qubit gates beyond the frontier
    while (scan_base < num_gates && executed[scan_base]) ++scan_base;
    std::vector<std::size_t> extended;
    for (std::size_t g = scan_base; g < num_gates && extended.size() < 20;
         ++g) {
      if (executed[g] || !gates[g].is_two_qubit()) continue;
      if (std::find(frontier.begin(), frontier.end(), g) != frontier.end())
        continue;
      extended.push_back(g);
    }

    double best_score = std::numeric_limits<double>::infinity();
    std::pair<int, int> best_edge{-1, -1};
    for (const auto& edge : arch.edges()) {  // lexicographic order
      if (!hot[static_cast<std::size_t>(edge.first)] &&
          !hot[static_cast<std::size_t>(edge.second)]) {
        continue;
      }
      if (edge == last_swap) continue;  // never undo the previous swap
      auto dist_after = [&](int q) {
        int phys = layout.physical_of(q);
        if (phys == edge.first) return edge.second;
        if (phys == edge.second) return edge.first;
        return phys;
      };
      double score = 0.0;
      for (std::size_t g : frontier) {
        score += arch.distance(dist_after(gates[g].q0),
                               dist_after(gates[g].q1));
      }
      for (std::size_t g : extended) {
        score += 0.5 * arch.distance(dist_after(gates[g].q0),
                                     dist_after(gates[g].q1));
      }
      if (score < best_score) {
        best_score = score;
        best_edge = edge;
      }
    }
    if (best_edge.first < 0) {
      // everything adjacent was excluded; fall back to the previous swap
      best_edge = last_swap;
    }
    insert_swap(best_edge.first, best_edge.second);
    last_swap = best_edge;
    ++stalled;
  }

  stats.added_cnots = 3 * stats.added_swap_count;
  stats.total_cnots = stats.original_cnots + stats.added_cnots;
  return CompileResult{std::move(routed), std::move(stats), layout};
}

}  // namespace xtc

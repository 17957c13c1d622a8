/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xtc {

/// Maximum number of couplers per physical qubit (fixed-frequency transmon
/// bus-resonator constraint).
inline constexpr int kMaxDegree = 4;

/**
 * A coupling graph. Tree architectures (the X-Tree family) additionally
 * carry per-qubit levels and parent links, with level(root) == 0.
 * General connected graphs model baselines such as the 17-qubit grid.
 *
 * Immutable after construction.
 */
class Architecture {
 public:
  /// Build from an edge list; connectivity is required. Tree structure,
  /// levels and parents are derived (root defaults to vertex 0 for trees).
  static Architecture from_edges(int num_qubits,
                                 std::vector<std::pair<int, int>> edges,
                                 int root = 0);

  int num_qubits() const { return num_qubits_; }
  bool is_tree() const { return is_tree_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int q) const {
    return adjacency_[static_cast<std::size_t>(q)];
  }
  bool adjacent(int u, int v) const;

  // Tree-only accessors (throw NotATree otherwise).
  int root() const;
  int level(int q) const;
  int parent(int q) const;  ///< -1 for the root
  const std::vector<int>& children(int q) const;
  int num_levels() const;
  /// Physical qubits at a given level, ascending.
  const std::vector<int>& qubits_at_level(int level) const;

  int connection_count() const { return static_cast<int>(edges_.size()); }
  std::map<int, int> degree_histogram() const;
  /// Unweighted shortest-path length.
  int distance(int u, int v) const;
  /// Next hop from u on a shortest path toward v (lowest-index tie-break).
  int next_hop(int u, int v) const;

 private:
  Architecture() = default;

  int num_qubits_ = 0;
  bool is_tree_ = false;
  int root_ = -1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> levels_;
  std::vector<int> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> by_level_;
  std::vector<std::vector<int>> dist_;  // all-pairs BFS
};

/// Uniform X-Tree: children_per_level[k] children on every level-k node.
/// Throws DegreeBoundViolated when a node would exceed four neighbors.
Architecture build_xtree(const std::vector<int>& children_per_level);

/// Canonical architectures: XTree5Q, XTree8Q, XTree17Q, XTree26Q.
Architecture make_architecture(const std::string& name);

/// Architecture JSON: {"num_qubits": N, "edges": [[u,v], ...], "root": r?}.
/// Throws Disconnected / DuplicateEdge / SchemaError.
Architecture load_architecture(const std::filesystem::path& path);
void save_architecture(const Architecture& arch,
                       const std::filesystem::path& path);
Architecture architecture_from_json_text(const std::string& text);
std::string architecture_to_json_text(const Architecture& arch);

}  // namespace xtc

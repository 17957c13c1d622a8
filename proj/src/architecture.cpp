/*
 * Copyright (c) 2026 The xtc developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "xtc/architecture.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "xtc/errors.hpp"

namespace xtc {

using nlohmann::json;

Architecture Architecture::from_edges(int num_qubits,
                                      std::vector<std::pair<int, int>> edges,
                                      int root) {
  if (num_qubits <= 0)
    throw_validation("SchemaError", "num_qubits must be positive");
  Architecture arch;
  arch.num_qubits_ = num_qubits;
  arch.adjacency_.assign(static_cast<std::size_t>(num_qubits), {});
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= num_qubits || u == v) {
      throw_validation("SchemaError", "edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") out of range");
    }
    if (!seen.insert({u, v}).second) {
      throw_validation("DuplicateEdge", "edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") repeated");
    }
    arch.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    arch.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  arch.edges_.assign(seen.begin(), seen.end());
  for (auto& nbrs : arch.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // all-pairs BFS; doubles as the connectivity check
  arch.dist_.assign(static_cast<std::size_t>(num_qubits),
                    std::vector<int>(static_cast<std::size_t>(num_qubits), -1));
  for (int s = 0; s < num_qubits; ++s) {
    auto& dist = arch.dist_[static_cast<std::size_t>(s)];
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : arch.adjacency_[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < num_qubits; ++v) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        throw_validation("Disconnected", "qubit " + std::to_string(v) +
                                             " unreachable from " +
                                             std::to_string(s));
      }
    }
  }

  arch.is_tree_ =
      static_cast<int>(arch.edges_.size()) == num_qubits - 1;
  if (arch.is_tree_) {
    if (root < 0 || root >= num_qubits)
      throw_validation("SchemaError", "root out of range");
    arch.root_ = root;
    arch.levels_.assign(static_cast<std::size_t>(num_qubits), 0);
    arch.parents_.assign(static_cast<std::size_t>(num_qubits), -1);
    arch.children_.assign(static_cast<std::size_t>(num_qubits), {});
    for (int q = 0; q < num_qubits; ++q) {
      arch.levels_[static_cast<std::size_t>(q)] =
          arch.dist_[static_cast<std::size_t>(root)][static_cast<std::size_t>(q)];
    }
    int max_level = 0;
    for (int q = 0; q < num_qubits; ++q) {
      max_level = std::max(max_level, arch.levels_[static_cast<std::size_t>(q)]);
      if (q == root) continue;
      for (int nbr : arch.adjacency_[static_cast<std::size_t>(q)]) {
        if (arch.levels_[static_cast<std::size_t>(nbr)] ==
            arch.levels_[static_cast<std::size_t>(q)] - 1) {
          arch.parents_[static_cast<std::size_t>(q)] = nbr;
          break;
        }
      }
      arch.children_[static_cast<std::size_t>(
                         arch.parents_[static_cast<std::size_t>(q)])]
          .push_back(q);
    }
    arch.by_level_.assign(static_cast<std::size_t>(max_level) + 1, {});
    for (int q = 0; q < num_qubits; ++q) {
      arch.by_level_[static_cast<std::size_t>(
                         arch.levels_[static_cast<std::size_t>(q)])]
          .push_back(q);
    }
  }
  return arch;
}

bool Architecture::adjacent(int u, int v) const {
  if (u == v) return false;
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == 1;
}

int Architecture::root() const {
  if (!is_tree_) throw_validation("NotATree", "architecture is not a tree");
  return root_;
}

int Architecture::level(int q) const {
  if (!is_tree_) throw_validation("NotATree", "levels require a tree");
  return levels_[static_cast<std::size_t>(q)];
}

int Architecture::parent(int q) const {
  if (!is_tree_) throw_validation("NotATree", "parents require a tree");
  return parents_[static_cast<std::size_t>(q)];
}

const std::vector<int>& Architecture::children(int q) const {
  if (!is_tree_) throw_validation("NotATree", "children require a tree");
  return children_[static_cast<std::size_t>(q)];
}

int Architecture::num_levels() const {
  if (!is_tree_) throw_validation("NotATree", "levels require a tree");
  return static_cast<int>(by_level_.size());
}

const std::vector<int>& Architecture::qubits_at_level(int level) const {
  if (!is_tree_) throw_validation("NotATree", "levels require a tree");
  return by_level_[static_cast<std::size_t>(level)];
}

std::map<int, int> Architecture::degree_histogram() const {
  std::map<int, int> hist;
  for (const auto& nbrs : adjacency_) hist[static_cast<int>(nbrs.size())]++;
  return hist;
}

int Architecture::distance(int u, int v) const {
  return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

int Architecture::next_hop(int u, int v) const {
  if (u == v) return u;
  for (int nbr : adjacency_[static_cast<std::size_t>(u)]) {
    if (distance(nbr, v) == distance(u, v) - 1) return nbr;
  }
  return -1;  // unreachable: the graph is connected
}

Architecture build_xtree(const std::vector<int>& children_per_level) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> current_level{0};
  int next = 1;
  for (std::size_t k = 0; k < children_per_level.size(); ++k) {
    int fanout = children_per_level[k];
    if (fanout < 0)
      throw_validation("SchemaError", "negative fanout");
    // parent link (absent at the root) plus children must fit in 4 couplers
    int degree = fanout + (k == 0 ? 0 : 1);
    if (degree > kMaxDegree) {
      throw_validation("DegreeBoundViolated",
                       "level-" + std::to_string(k) + " nodes would have " +
                           std::to_string(degree) + " neighbors (max " +
                           std::to_string(kMaxDegree) + ")");
    }
    std::vector<int> next_level;
    for (int node : current_level) {
      for (int c = 0; c < fanout; ++c) {
        edges.emplace_back(node, next);
        next_level.push_back(next);
        ++next;
      }
    }
    current_level = std::move(next_level);
  }
  return Architecture::from_edges(next, std::move(edges), 0);
}

Architecture make_architecture(const std::string& name) {
  if (name == "XTree5Q") return build_xtree({4});
  if (name == "XTree17Q") return build_xtree({4, 3});
  if (name == "XTree8Q") {
    // XTree5Q plus three children on one leaf
    return Architecture::from_edges(
        8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}}, 0);
  }
  if (name == "XTree26Q") {
    // XTree17Q plus three children on each of three distinct level-2
    // qubits. The shape is one of several that honor the degree bound.
    Architecture base = make_architecture("XTree17Q");
    std::vector<std::pair<int, int>> edges = base.edges();
    int next = 17;
    for (int host : {5, 8, 11}) {
      for (int c = 0; c < 3; ++c) edges.emplace_back(host, next++);
    }
    return Architecture::from_edges(next, std::move(edges), 0);
  }
  throw_validation("SchemaError", "unknown architecture name: " + name);
}

Architecture architecture_from_json_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw_validation("SchemaError", "invalid JSON in architecture");
  if (!doc.is_object() || !doc.contains("num_qubits") ||
      !doc["num_qubits"].is_number_integer()) {
    throw_validation("SchemaError", "$.num_qubits must be an integer");
  }
  int n = doc["num_qubits"].get<int>();
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw_validation("SchemaError", "$.edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw_validation("SchemaError", "$.edges entries must be [u, v] pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  int root = 0;
  if (doc.contains("root")) {
    if (!doc["root"].is_number_integer())
      throw_validation("SchemaError", "$.root must be an integer");
    root = doc["root"].get<int>();
  }
  return Architecture::from_edges(n, std::move(edges), root);
}

std::string architecture_to_json_text(const Architecture& arch) {
  json edges = json::array();
  for (const auto& [u, v] : arch.edges()) edges.push_back({u, v});
  json doc{{"num_qubits", arch.num_qubits()}, {"edges", std::move(edges)}};
  if (arch.is_tree()) doc["root"] = arch.root();
  return doc.dump(2) + "\n";
}

Architecture load_architecture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_validation("SchemaError", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return architecture_from_json_text(buf.str());
}

void save_architecture(const Architecture& arch,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw_validation("SchemaError", "cannot write " + path.string());
  out << architecture_to_json_text(arch);
}

}  // namespace xtc

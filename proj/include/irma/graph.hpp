// Copyright 2026 The irma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IRMA_GRAPH_HPP_
#define IRMA_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace irma {

using VertexId = std::uint32_t;

struct LoadStats {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

// Immutable undirected simple graph in CSR form. Vertex ids are dense
// [0, vertex_count); the original labels are retained for I/O. Neighbor
// lists are sorted and duplicate-free, so membership tests are binary
// searches and iteration order is stable. Instances are safe to share
// across threads once constructed.
class Graph {
 public:
  Graph() = default;

  std::uint32_t vertex_count() const noexcept {
    return static_cast<std::uint32_t>(labels_.size());
  }

  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::uint32_t degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(VertexId u, VertexId v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  std::optional<VertexId> find_label(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
  }

  const LoadStats& load_stats() const noexcept { return stats_; }

  std::uint32_t max_degree() const noexcept {
    std::uint32_t best = 0;
    for (VertexId v = 0; v < vertex_count(); ++v) {
      best = std::max(best, offsets_[v + 1] - offsets_[v]);
    }
    return best;
  }

  // Builds from dense-id edges over exactly `n` vertices (isolated vertices
  // are kept). Self-loops are dropped and parallel edges deduplicated; both
  // are counted in load_stats(). Labels default to the decimal ids.
  static Graph from_dense_edges(std::uint32_t n,
                                std::vector<std::pair<VertexId, VertexId>> edges,
                                std::vector<std::string> labels = {}) {
    Graph g;
    if (labels.empty()) {
      labels.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) throw std::invalid_argument("label count mismatch");
    g.labels_ = std::move(labels);
    g.label_to_id_.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!g.label_to_id_.emplace(g.labels_[i], i).second) {
        throw std::invalid_argument("duplicate vertex label");
      }
    }

    std::vector<std::pair<VertexId, VertexId>> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
      if (u == v) {
        ++g.stats_.self_loops;
        continue;
      }
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    auto last = std::unique(normalized.begin(), normalized.end());
    g.stats_.duplicate_edges = static_cast<std::size_t>(normalized.end() - last);
    normalized.erase(last, normalized.end());

    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : normalized) {
      ++deg[u];
      ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : normalized) {
      g.adjacency_[cursor[u]++] = v;
      g.adjacency_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v) {
      std::sort(g.adjacency_.begin() + g.offsets_[v],
                g.adjacency_.begin() + g.offsets_[v + 1]);
    }
    return g;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex id out of range");
  }

  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_to_id_;
  LoadStats stats_;
};

// Builds a graph from labeled edges. Labels are densely re-indexed in first
// appearance order; every label that occurs becomes a vertex, including ones
// seen only in dropped self-loops.
inline Graph build_graph(std::span<const std::pair<std::string, std::string>> edges) {
  if (edges.empty()) throw std::invalid_argument("empty graph");
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<std::pair<VertexId, VertexId>> dense;
  dense.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    dense.emplace_back(intern(a), intern(b));
  }
  return Graph::from_dense_edges(static_cast<std::uint32_t>(labels.size()),
                                 std::move(dense), std::move(labels));
}

inline Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edges) {
  return build_graph(std::span<const std::pair<std::string, std::string>>(edges));
}

// Edge-list text format: one edge per line, two whitespace-separated tokens;
// lines starting with '#' or '%' are comments. Isolated vertices are not
// representable in this format.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // whitespace-only line
    if (a[0] == '#' || a[0] == '%') continue;
    if (!(ls >> b)) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected two tokens");
    }
    if (ls >> extra) {
      throw std::runtime_error("edge list line " + std::to_string(lineno) +
                               ": expected two tokens");
    }
    edges.emplace_back(std::move(a), std::move(b));
  }
  return build_graph(edges);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
    }
  }
}

inline Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  return read_edge_list(in);
}

inline void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path.string());
  write_edge_list(g, out);
}

}  // namespace irma

#endif  // IRMA_GRAPH_HPP_

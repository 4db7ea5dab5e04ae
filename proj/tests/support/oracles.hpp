// Copyright 2026 The cage5 Authors
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

#pragma once

// Reference computations for tests. They deliberately use different
// algorithms from the library: girth by edge deletion, distances by
// Floyd-Warshall, graphs from explicit edge lists.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "cage5/graph.hpp"

namespace cage5::oracle {

using AdjList = std::vector<std::vector<VertexId>>;

inline AdjList adjacency(const LabeledGraph& g) {
  AdjList a(g.order());
  for (const Edge& e : g.edges()) {
    a[e.u].push_back(e.v);
    a[e.v].push_back(e.u);
  }
  return a;
}

// Shortest u-v path avoiding the edge uv, over all edges, plus one.
inline std::optional<std::size_t> girth_by_edge_deletion(const LabeledGraph& g) {
  const AdjList a = adjacency(g);
  std::optional<std::size_t> best;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::deque<VertexId> queue{e.u};
    dist[e.u] = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : a[x]) {
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[e.v] >= 0) {
      const std::size_t len = static_cast<std::size_t>(dist[e.v]) + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

inline std::vector<std::vector<int>> all_distances(const LabeledGraph& g) {
  const int inf = std::numeric_limits<int>::max() / 4;
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline int diameter_by_floyd(const LabeledGraph& g) {
  int out = 0;
  for (const auto& row : all_distances(g)) {
    for (int x : row) out = std::max(out, x);
  }
  return out;
}

inline LabeledGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline LabeledGraph cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return from_edges(n, e);
}

inline LabeledGraph complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return from_edges(n, e);
}

// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
inline LabeledGraph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline LabeledGraph with_cyclic_labels(const LabeledGraph& g) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  std::vector<GroupElem> labels(g.order());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<GroupElem>(i);
  b.set_labels(GroupSpec::cyclic(static_cast<std::uint32_t>(g.order())), std::move(labels));
  return std::move(b).build();
}

inline bool is_bipartite_even_odd(const LabeledGraph& g) {
  for (const Edge& e : g.edges()) {
    if ((g.label(e.u) % 2) == (g.label(e.v) % 2)) return false;
  }
  return true;
}

}  // namespace cage5::oracle

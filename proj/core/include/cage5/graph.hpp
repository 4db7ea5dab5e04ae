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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cage5/group.hpp"

namespace cage5 {

using VertexId = std::uint32_t;

/// Undirected edge with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An edge expressed through the group labels of its endpoints, smaller label
/// first. Two graphs on the same carrier share an edge iff they share one of
/// these.
using LabelEdge = std::pair<GroupElem, GroupElem>;

/// Simple undirected graph with dense vertex ids 0..n-1, stored in CSR form.
///
/// Vertices may carry labels in a finite abelian group. Labels are attached
/// data: amalgamation installs the same labelled graph into many blocks, so
/// identity is always the dense id. When a group is attached every vertex has
/// a label and labels are pairwise distinct.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const noexcept;
  std::vector<Edge> edges() const;

  const std::optional<GroupSpec>& group() const noexcept { return group_; }
  bool labeled() const noexcept { return group_.has_value(); }
  /// Throws std::logic_error on an unlabelled graph.
  GroupElem label(VertexId v) const;
  std::span<const GroupElem> labels() const noexcept { return labels_; }
  std::optional<VertexId> vertex_with_label(GroupElem a) const;
  /// True when the labels cover the whole group carrier.
  bool labels_cover_group() const noexcept;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::optional<GroupSpec> group_;
  std::vector<GroupElem> labels_;
};

/// Accumulates edges, then freezes them into a LabeledGraph. Loops and
/// out-of-range endpoints throw immediately; duplicate edges throw in build().
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Attaches a labelling; labels must be distinct members of `group`.
  GraphBuilder& set_labels(GroupSpec group, std::vector<GroupElem> labels);
  GraphBuilder& add_edge(VertexId u, VertexId v);
  std::size_t order() const noexcept { return n_; }

  LabeledGraph build() &&;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<GroupSpec> group_;
  std::vector<GroupElem> labels_;
};

/// Graph on the given labels (vertex i carries labels[i]) with edges given by
/// label pairs.
LabeledGraph graph_from_label_edges(const GroupSpec& group, std::vector<GroupElem> labels,
                                    const std::vector<LabelEdge>& edges);

/// Sorted edge list in label space.
std::vector<LabelEdge> label_edges(const LabeledGraph& g);

/// Degree -> number of vertices with that degree.
using DegreeProfile = std::map<std::size_t, std::size_t>;

DegreeProfile degree_profile(const LabeledGraph& g);
bool is_regular(const LabeledGraph& g, std::size_t k);
bool is_biregular(const LabeledGraph& g, std::size_t k1, std::size_t k2);
/// The common degree if g is regular and non-empty.
std::optional<std::size_t> regularity(const LabeledGraph& g);

/// Exact girth. std::nullopt means the graph is a forest (infinite girth).
///
/// BFS from every source; a source's search stops once no cycle shorter than
/// the best found so far can still be discovered. Sources are split across
/// threads for large graphs and reduced by minimum.
std::optional<std::size_t> girth(const LabeledGraph& g);

/// Exact diameter by all-sources BFS. Throws std::domain_error when g is
/// disconnected or empty.
std::size_t diameter(const LabeledGraph& g);

std::size_t connected_components(const LabeledGraph& g);

/// { +-(label(u) - label(v)) : uv in E }. Throws std::logic_error when g has
/// no labelling.
std::set<GroupElem> cayley_colors(const LabeledGraph& g);

/// Throws std::invalid_argument when the graphs are labelled over different
/// groups.
bool colors_disjoint(const LabeledGraph& g0, const LabeledGraph& g1);

/// Subgraph induced by the vertices with keep[v] true; ids are renumbered in
/// increasing order and labels carried along.
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<bool>& keep);

/// Same graph with every label a replaced by perm[a]; perm must be a
/// permutation of the group carrier.
LabeledGraph relabel(const LabeledGraph& g, const std::vector<GroupElem>& perm);

/// Same graph with labels translated by c.
LabeledGraph translate_labels(const LabeledGraph& g, GroupElem c);

/// Same edges, labels reinterpreted in another group of equal order.
LabeledGraph with_group(const LabeledGraph& g, const GroupSpec& group);

}  // namespace cage5

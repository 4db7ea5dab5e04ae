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

#include "cage5/graph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace cage5 {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

std::size_t worker_count(std::size_t n) {
  if (n < 1024) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::max<std::size_t>(1, std::min<std::size_t>(hw == 0 ? 1 : hw, 16));
}

// Runs fn(worker, source) for every vertex, sources striped across workers.
template <typename Fn>
void for_each_source(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers <= 1) {
    for (VertexId s = 0; s < n; ++s) fn(0, s);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t s = w; s < n; s += workers) fn(w, static_cast<VertexId>(s));
    });
  }
}

struct BfsScratch {
  std::vector<std::uint32_t> dist;
  std::vector<VertexId> parent;
  std::vector<VertexId> queue;

  explicit BfsScratch(std::size_t n) : dist(n, kUnseen), parent(n, 0) { queue.reserve(n); }

  void reset() {
    for (VertexId v : queue) dist[v] = kUnseen;
    queue.clear();
  }
};

// Length of the shortest cycle detectable from `source` that is shorter than
// `best`; returns `best` if none.
std::size_t shortest_cycle_below(const LabeledGraph& g, VertexId source, std::size_t best,
                                 BfsScratch& s) {
  s.dist[source] = 0;
  s.parent[source] = source;
  s.queue.push_back(source);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const VertexId u = s.queue[head];
    const std::size_t d = s.dist[u];
    if (2 * d + 1 >= best) break;
    for (VertexId v : g.neighbors(u)) {
      if (s.dist[v] == kUnseen) {
        s.dist[v] = static_cast<std::uint32_t>(d + 1);
        s.parent[v] = u;
        s.queue.push_back(v);
      } else if (v != s.parent[u]) {
        best = std::min(best, d + s.dist[v] + 1);
      }
    }
  }
  s.reset();
  return best;
}

std::size_t eccentricity(const LabeledGraph& g, VertexId source, BfsScratch& s,
                         std::size_t& reached) {
  s.dist[source] = 0;
  s.queue.push_back(source);
  std::size_t ecc = 0;
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const VertexId u = s.queue[head];
    ecc = s.dist[u];
    for (VertexId v : g.neighbors(u)) {
      if (s.dist[v] == kUnseen) {
        s.dist[v] = s.dist[u] + 1;
        s.queue.push_back(v);
      }
    }
  }
  reached = s.queue.size();
  s.reset();
  return ecc;
}

}  // namespace

bool LabeledGraph::has_edge(VertexId u, VertexId v) const noexcept {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

GroupElem LabeledGraph::label(VertexId v) const {
  if (!group_) throw std::logic_error("graph has no group labelling");
  return labels_.at(v);
}

std::optional<VertexId> LabeledGraph::vertex_with_label(GroupElem a) const {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == a) return v;
  }
  return std::nullopt;
}

bool LabeledGraph::labels_cover_group() const noexcept {
  return group_ && labels_.size() == group_->order();
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n) {
  if (n >= kUnseen) throw std::invalid_argument("graph too large");
}

GraphBuilder& GraphBuilder::set_labels(GroupSpec group, std::vector<GroupElem> labels) {
  if (labels.size() != n_) throw std::invalid_argument("label count differs from vertex count");
  std::vector<bool> seen(group.order(), false);
  for (GroupElem a : labels) {
    if (!group.contains(a)) throw std::invalid_argument("label outside the group carrier");
    if (seen[a]) throw std::invalid_argument("labels must be distinct");
    seen[a] = true;
  }
  group_ = group;
  labels_ = std::move(labels);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
  return *this;
}

LabeledGraph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  LabeledGraph g;
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.group_ = group_;
  g.labels_ = std::move(labels_);
  return g;
}

LabeledGraph graph_from_label_edges(const GroupSpec& group, std::vector<GroupElem> labels,
                                    const std::vector<LabelEdge>& edges) {
  std::vector<VertexId> index(group.order(), kUnseen);
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!group.contains(labels[v])) throw std::invalid_argument("label outside the group carrier");
    index[labels[v]] = v;
  }
  GraphBuilder b(labels.size());
  for (const auto& [x, y] : edges) {
    if (!group.contains(x) || !group.contains(y) || index[x] == kUnseen || index[y] == kUnseen) {
      throw std::invalid_argument("edge endpoint is not a vertex label");
    }
    b.add_edge(index[x], index[y]);
  }
  b.set_labels(group, std::move(labels));
  return std::move(b).build();
}

std::vector<LabelEdge> label_edges(const LabeledGraph& g) {
  std::vector<LabelEdge> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) {
    GroupElem a = g.label(e.u);
    GroupElem b = g.label(e.v);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeProfile degree_profile(const LabeledGraph& g) {
  DegreeProfile out;
  for (VertexId v = 0; v < g.order(); ++v) ++out[g.degree(v)];
  return out;
}

bool is_regular(const LabeledGraph& g, std::size_t k) {
  const auto r = regularity(g);
  return r && *r == k;
}

bool is_biregular(const LabeledGraph& g, std::size_t k1, std::size_t k2) {
  for (const auto& [deg, count] : degree_profile(g)) {
    if (deg != k1 && deg != k2) return false;
  }
  return g.order() > 0;
}

std::optional<std::size_t> regularity(const LabeledGraph& g) {
  const DegreeProfile p = degree_profile(g);
  if (p.size() != 1) return std::nullopt;
  return p.begin()->first;
}

std::optional<std::size_t> girth(const LabeledGraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  const std::size_t workers = worker_count(n);
  std::atomic<std::size_t> best{kInfinite};
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) scratch.emplace_back(n);

  for_each_source(n, workers, [&](std::size_t w, VertexId s) {
    const std::size_t current = best.load(std::memory_order_relaxed);
    if (current == 3) return;
    const std::size_t found = shortest_cycle_below(g, s, current, scratch[w]);
    std::size_t prev = best.load(std::memory_order_relaxed);
    while (found < prev && !best.compare_exchange_weak(prev, found)) {
    }
  });
  const std::size_t b = best.load();
  if (b == kInfinite) return std::nullopt;
  return b;
}

std::size_t diameter(const LabeledGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::domain_error("diameter of the empty graph");
  const std::size_t workers = worker_count(n);
  std::vector<BfsScratch> scratch;
  scratch.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) scratch.emplace_back(n);
  std::atomic<std::size_t> diam{0};
  std::atomic<bool> disconnected{false};
  for_each_source(n, workers, [&](std::size_t w, VertexId s) {
    if (disconnected.load(std::memory_order_relaxed)) return;
    std::size_t reached = 0;
    const std::size_t ecc = eccentricity(g, s, scratch[w], reached);
    if (reached != n) {
      disconnected = true;
      return;
    }
    std::size_t prev = diam.load(std::memory_order_relaxed);
    while (ecc > prev && !diam.compare_exchange_weak(prev, ecc)) {
    }
  });
  if (disconnected) throw std::domain_error("diameter of a disconnected graph");
  return diam.load();
}

std::size_t connected_components(const LabeledGraph& g) {
  BfsScratch s(g.order());
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    ++count;
    s.dist[v] = 0;
    s.queue.push_back(v);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
      const VertexId u = s.queue[head];
      seen[u] = true;
      for (VertexId w : g.neighbors(u)) {
        if (s.dist[w] == kUnseen) {
          s.dist[w] = 0;
          s.queue.push_back(w);
        }
      }
    }
    s.reset();
  }
  return count;
}

std::set<GroupElem> cayley_colors(const LabeledGraph& g) {
  if (!g.group()) throw std::logic_error("cayley colours need a group labelling");
  const GroupSpec& grp = *g.group();
  std::set<GroupElem> out;
  for (const Edge& e : g.edges()) {
    const GroupElem d = grp.sub(g.label(e.u), g.label(e.v));
    out.insert(d);
    out.insert(grp.neg(d));
  }
  return out;
}

bool colors_disjoint(const LabeledGraph& g0, const LabeledGraph& g1) {
  if (!g0.group() || !g1.group() || !(*g0.group() == *g1.group())) {
    throw std::invalid_argument("colour comparison needs graphs over the same group");
  }
  const auto c0 = cayley_colors(g0);
  for (GroupElem c : cayley_colors(g1)) {
    if (c0.contains(c)) return false;
  }
  return true;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.order()) throw std::invalid_argument("keep mask has wrong length");
  std::vector<VertexId> index(g.order(), kUnseen);
  std::size_t n = 0;
  std::vector<GroupElem> labels;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    index[v] = static_cast<VertexId>(n++);
    if (g.labeled()) labels.push_back(g.label(v));
  }
  GraphBuilder b(n);
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) b.add_edge(index[e.u], index[e.v]);
  }
  if (g.labeled()) b.set_labels(*g.group(), std::move(labels));
  return std::move(b).build();
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<GroupElem>& perm) {
  if (!g.group()) throw std::logic_error("relabel needs a group labelling");
  if (perm.size() != g.group()->order()) throw std::invalid_argument("permutation has wrong size");
  std::vector<GroupElem> labels;
  labels.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) labels.push_back(perm.at(g.label(v)));
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  b.set_labels(*g.group(), std::move(labels));
  return std::move(b).build();
}

LabeledGraph translate_labels(const LabeledGraph& g, GroupElem c) {
  if (!g.group()) throw std::logic_error("translate needs a group labelling");
  std::vector<GroupElem> labels;
  for (VertexId v = 0; v < g.order(); ++v) labels.push_back(g.group()->add(g.label(v), c));
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  b.set_labels(*g.group(), std::move(labels));
  return std::move(b).build();
}

LabeledGraph with_group(const LabeledGraph& g, const GroupSpec& group) {
  if (!g.group()) throw std::logic_error("graph has no group labelling");
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  b.set_labels(group, std::vector<GroupElem>(g.labels().begin(), g.labels().end()));
  return std::move(b).build();
}

}  // namespace cage5

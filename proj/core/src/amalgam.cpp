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


#include "cage5/amalgam.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace cage5 {
namespace {

constexpr VertexId kDropped = ~VertexId{0};

bool same_labelling(const LabeledGraph& g, const GroupSpec& group) {
  return g.group() && *g.group() == group;
}

// Every vertex carries a label of `group`; throws when the labelling is not a
// bijection onto the carrier.
void require_bijective(const LabeledGraph& g, const GroupSpec& group, const char* name) {
  if (!same_labelling(g, group) || g.order() != group.order() || !g.labels_cover_group()) {
    throw std::invalid_argument(
        fmt::format("{} is not labelled bijectively on {}", name, group.to_string()));
  }
}

bool girth_at_least_five(const LabeledGraph& g) {
  const auto gi = girth(g);
  return !gi || *gi >= 5;
}

bool edges_disjoint(const LabeledGraph& a, const LabeledGraph& b) {
  const auto ea = label_edges(a);
  const auto eb = label_edges(b);
  auto i = ea.begin();
  auto j = eb.begin();
  while (i != ea.end() && j != eb.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::set<GroupElem> label_set(const LabeledGraph& g) {
  return {g.labels().begin(), g.labels().end()};
}

std::set<GroupElem> labels_of_degree(const LabeledGraph& g, std::size_t d) {
  std::set<GroupElem> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == d) out.insert(g.label(v));
  }
  return out;
}

// Installs `inner` into the block whose label -> vertex map is `block`.
void install(GraphBuilder& b, const LabeledGraph& inner, const std::vector<VertexId>& block,
             const std::vector<VertexId>& index) {
  for (const Edge& e : inner.edges()) {
    const VertexId u = index[block[inner.label(e.u)]];
    const VertexId v = index[block[inner.label(e.v)]];
    if (u == kDropped || v == kDropped) throw std::logic_error("installed edge leaves its block");
    b.add_edge(u, v);
  }
}

void verify_amalgam(const Amalgam& a) {
  const std::size_t k = a.regularity();
  if (!is_regular(a.graph, k)) {
    throw VerificationError(fmt::format("amalgam over q={} is not {}-regular", a.q, k));
  }
  if (!girth_at_least_five(a.graph)) {
    throw VerificationError(fmt::format("amalgam over q={} has girth below five", a.q));
  }
}

std::vector<std::vector<VertexId>> remap_blocks(const std::vector<std::vector<VertexId>>& blocks,
                                                const std::vector<VertexId>& index) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(blocks.size());
  for (const auto& blk : blocks) {
    std::vector<VertexId> nb(blk.size(), kDropped);
    for (std::size_t a = 0; a < blk.size(); ++a) {
      if (blk[a] != kDropped) nb[a] = index[blk[a]];
    }
    out.push_back(std::move(nb));
  }
  return out;
}

}  // namespace

SuitabilityReport check_suitable_pair(const LabeledGraph& g0, const LabeledGraph& g1,
                                      const GroupSpec& group) {
  require_bijective(g0, group, "G0");
  require_bijective(g1, group, "G1");
  SuitabilityReport rep;
  const auto r0 = regularity(g0);
  const auto r1 = regularity(g1);
  if (!r0 || !r1 || *r0 != *r1) {
    rep.diagnostic = "G0 and G1 are not regular of a common degree";
    return rep;
  }
  rep.r = *r0;
  if (!girth_at_least_five(g0)) {
    rep.diagnostic = "G0 has girth below five";
    return rep;
  }
  if (!girth_at_least_five(g1)) {
    rep.diagnostic = "G1 has girth below five";
    return rep;
  }
  if (!colors_disjoint(g0, g1)) {
    rep.diagnostic = "G0 and G1 share a Cayley colour";
    return rep;
  }
  rep.ok = true;
  return rep;
}

QuadrupleReport check_biregular_quadruple(const LabeledGraph& h0, const LabeledGraph& h1,
                                          const LabeledGraph& g0, const LabeledGraph& g1,
                                          const FieldSpec& field) {
  const GroupSpec group = field.additive_group();
  QuadrupleReport rep;
  auto fail = [&rep](const char* clause, std::string msg) {
    rep.clause = clause;
    rep.diagnostic = std::move(msg);
    return rep;
  };

  // (i)
  for (const auto* g : {&g0, &g1}) {
    const char* name = g == &g0 ? "G0" : "G1";
    if (!same_labelling(*g, group) || g->order() != group.order() || !g->labels_cover_group()) {
      return fail("i", fmt::format("{} is not labelled on all of F_{}", name, field.q()));
    }
  }
  const auto p0 = degree_profile(g0);
  const auto p1 = degree_profile(g1);
  const std::size_t r = p0.empty() ? 0 : p0.begin()->first;
  rep.r = r;
  for (const auto* prof : {&p0, &p1}) {
    for (const auto& [deg, count] : *prof) {
      if (deg != r && deg != r + 1) {
        return fail("i", fmt::format("G0, G1 are not ({}, {})-regular", r, r + 1));
      }
    }
  }
  if (!girth_at_least_five(g0)) return fail("i", "G0 has girth below five");
  if (!girth_at_least_five(g1)) return fail("i", "G1 has girth below five");

  // (ii)
  if (!same_labelling(h0, group) || !same_labelling(h1, group)) {
    return fail("ii", "H0, H1 are not labelled in the additive group");
  }
  const auto low0 = labels_of_degree(g0, r);
  const auto low1 = labels_of_degree(g1, r);
  if (label_set(h0) != low1) return fail("ii", "V(H0) differs from the degree-r vertices of G1");
  if (label_set(h1) != low0) return fail("ii", "V(H1) differs from the degree-r vertices of G0");
  if (low0 != low1) return fail("ii", "G0 and G1 have different degree-r vertex sets");
  if (h0.order() > 0 && !is_regular(h0, r)) return fail("ii", fmt::format("H0 is not {}-regular", r));
  if (h1.order() > 0 && !is_regular(h1, r)) return fail("ii", fmt::format("H1 is not {}-regular", r));
  if (!girth_at_least_five(h0)) return fail("ii", "H0 has girth below five");
  if (!girth_at_least_five(h1)) return fail("ii", "H1 has girth below five");

  // (iii)
  if (!edges_disjoint(h0, h1)) return fail("iii", "H0 and H1 share an edge");
  if (!edges_disjoint(h0, g1)) return fail("iii", "H0 and G1 share an edge");
  if (!edges_disjoint(h1, g0)) return fail("iii", "H1 and G0 share an edge");
  if (!colors_disjoint(g0, g1)) return fail("iii", "G0 and G1 share a Cayley colour");

  rep.ok = true;
  return rep;
}

Amalgam amalgamate_C(const BlockedLevi& base, const LabeledGraph& h0, const LabeledGraph& h1,
                     const LabeledGraph& g0, const LabeledGraph& g1) {
  if (base.kind != SemiplaneKind::C) throw std::invalid_argument("amalgamate_C needs C_q");
  const auto rep = check_biregular_quadruple(h0, h1, g0, g1, base.field);
  if (!rep.ok) {
    throw VerificationError(
        fmt::format("hypothesis ({}) fails: {}", rep.clause, rep.diagnostic));
  }
  const std::uint32_t q = base.field.q();

  std::vector<bool> keep(base.graph.order(), true);
  for (GroupElem a = 0; a < q; ++a) {
    if (!h0.vertex_with_label(a)) keep[base.point_blocks[0][a]] = false;
    if (!h1.vertex_with_label(a)) keep[base.line_blocks[0][a]] = false;
  }
  std::vector<VertexId> index(keep.size(), kDropped);
  std::size_t n = 0;
  for (VertexId v = 0; v < keep.size(); ++v) {
    if (keep[v]) index[v] = static_cast<VertexId>(n++);
  }

  GraphBuilder b(n);
  for (const Edge& e : base.graph.edges()) {
    if (keep[e.u] && keep[e.v]) b.add_edge(index[e.u], index[e.v]);
  }
  install(b, h0, base.point_blocks[0], index);
  install(b, h1, base.line_blocks[0], index);
  for (std::size_t x = 1; x < q; ++x) {
    install(b, g0, base.point_blocks[x], index);
    install(b, g1, base.line_blocks[x], index);
  }

  Amalgam a;
  a.kind = SemiplaneKind::C;
  a.q = q;
  a.r = rep.r;
  a.graph = std::move(b).build();
  a.point_blocks = remap_blocks(base.point_blocks, index);
  a.line_blocks = remap_blocks(base.line_blocks, index);
  for (std::size_t i = 0; i + 1 < q; ++i) a.deletion_pairs.emplace_back(q - 1 - i, q - 1 - i);
  verify_amalgam(a);
  return a;
}

Amalgam amalgamate_C(const BlockedLevi& base, const LabeledGraph& g0, const LabeledGraph& g1) {
  return amalgamate_C(base, g0, g1, g0, g1);
}

Amalgam amalgamate_L(const BlockedLevi& base, const LabeledGraph& g0, const LabeledGraph& g1) {
  if (base.kind != SemiplaneKind::L) throw std::invalid_argument("amalgamate_L needs L_q");
  const auto rep = check_suitable_pair(g0, g1, base.block_group);
  if (!rep.ok) throw VerificationError("pair is not suitable: " + rep.diagnostic);

  const std::size_t n = base.graph.order();
  std::vector<VertexId> index(n);
  for (VertexId v = 0; v < n; ++v) index[v] = v;

  GraphBuilder b(n);
  for (const Edge& e : base.graph.edges()) b.add_edge(e.u, e.v);
  for (const auto& blk : base.point_blocks) install(b, g0, blk, index);
  for (const auto& blk : base.line_blocks) install(b, g1, blk, index);

  Amalgam a;
  a.kind = SemiplaneKind::L;
  a.q = base.field.q();
  a.r = rep.r;
  a.graph = std::move(b).build();
  a.point_blocks = base.point_blocks;
  a.line_blocks = base.line_blocks;

  // Each point block misses exactly one line block; pair them, last first.
  const auto structure = verify_block_structure(base);
  for (std::size_t i = a.point_blocks.size(); i-- > 0;) {
    std::size_t partner = a.line_blocks.size();
    for (std::size_t j = 0; j < a.line_blocks.size(); ++j) {
      if (structure.at(i, j).shape == PairShape::empty) {
        partner = j;
        break;
      }
    }
    if (partner == a.line_blocks.size()) throw std::logic_error("point block without empty partner");
    a.deletion_pairs.emplace_back(i, partner);
  }
  verify_amalgam(a);
  return a;
}

Amalgam delete_block_pairs(const Amalgam& a, std::size_t d) {
  if (d > a.deletion_pairs.size()) {
    throw std::invalid_argument(
        fmt::format("cannot delete {} block pairs, only {} removable", d, a.deletion_pairs.size()));
  }
  std::vector<bool> keep(a.graph.order(), true);
  std::vector<bool> drop_point(a.point_blocks.size(), false);
  std::vector<bool> drop_line(a.line_blocks.size(), false);
  for (std::size_t i = 0; i < d; ++i) {
    const auto [pb, lb] = a.deletion_pairs[i];
    drop_point[pb] = true;
    drop_line[lb] = true;
    for (VertexId v : a.point_blocks[pb]) if (v != kDropped) keep[v] = false;
    for (VertexId v : a.line_blocks[lb]) if (v != kDropped) keep[v] = false;
  }
  std::vector<VertexId> index(keep.size(), kDropped);
  VertexId n = 0;
  for (VertexId v = 0; v < keep.size(); ++v) {
    if (keep[v]) index[v] = n++;
  }

  // Block indices shift down past removed blocks.
  auto shift = [](const std::vector<bool>& dropped) {
    std::vector<std::size_t> out(dropped.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < dropped.size(); ++i) out[i] = dropped[i] ? SIZE_MAX : next++;
    return out;
  };
  const auto pshift = shift(drop_point);
  const auto lshift = shift(drop_line);

  Amalgam out;
  out.kind = a.kind;
  out.q = a.q;
  out.r = a.r;
  out.deleted = a.deleted + d;
  out.graph = induced_subgraph(a.graph, keep);
  for (std::size_t i = 0; i < a.point_blocks.size(); ++i) {
    if (!drop_point[i]) out.point_blocks.push_back(a.point_blocks[i]);
  }
  for (std::size_t i = 0; i < a.line_blocks.size(); ++i) {
    if (!drop_line[i]) out.line_blocks.push_back(a.line_blocks[i]);
  }
  out.point_blocks = remap_blocks(out.point_blocks, index);
  out.line_blocks = remap_blocks(out.line_blocks, index);
  for (std::size_t i = d; i < a.deletion_pairs.size(); ++i) {
    const auto [pb, lb] = a.deletion_pairs[i];
    out.deletion_pairs.emplace_back(pshift[pb], lshift[lb]);
  }
  verify_amalgam(out);
  return out;
}

std::uint64_t bound_eq2(std::uint64_t q, std::uint64_t r, std::uint64_t k) {
  if (q < 2 || k < r || k > q + r) {
    throw std::invalid_argument(fmt::format("bound needs r <= k <= q + r (q={}, r={}, k={})", q, r, k));
  }
  return 2 * (q - 1) * (k - r + 1);
}

std::uint64_t bound_thm11(std::uint64_t q, std::uint64_t k) {
  if (q < 2 || k < 6 || k > q + 6) {
    throw std::invalid_argument(fmt::format("bound needs 6 <= k <= q + 6 (q={}, k={})", q, k));
  }
  return 2 * (q - 1) * (k - 5);
}

std::uint64_t bound_thm12(std::uint64_t q, std::uint64_t k) {
  if (q < 2 || k < 7 || k > q + 6) {
    throw std::invalid_argument(fmt::format("bound needs 7 <= k <= q + 6 (q={}, k={})", q, k));
  }
  return 2 * q * (k - 6);
}

std::uint64_t biregular_amalgam_order(std::uint64_t q, std::uint64_t h0_order) {
  return 2 * (q * q - q + h0_order);
}

}  // namespace cage5

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

#include "cage5/semiplane.hpp"

#include <stdexcept>
#include <utility>

namespace cage5 {

namespace {

// Nonzero pairs (a, b) with first nonzero coordinate 1, in code order.
std::vector<std::pair<FieldElem, FieldElem>> directions(const FieldSpec& f) {
  std::vector<std::pair<FieldElem, FieldElem>> out;
  out.emplace_back(f.zero(), f.one());
  for (std::uint32_t b = 0; b < f.q(); ++b) out.emplace_back(f.one(), FieldElem{b});
  return out;
}

}  // namespace

std::string to_string(SemiplaneKind kind) { return kind == SemiplaneKind::C ? "C" : "L"; }

BlockedLevi build_Cq(const FieldSpec& field) {
  const std::uint32_t q = field.q();
  const std::size_t half = std::size_t{q} * q;
  GraphBuilder b(2 * half);
  BlockedLevi bl{SemiplaneKind::C, field, {}, field.additive_group(), {}, {}, {}, {}, half};
  bl.block_of.resize(2 * half);
  bl.label_of.resize(2 * half);
  bl.point_blocks.assign(q, std::vector<VertexId>(q));
  bl.line_blocks.assign(q, std::vector<VertexId>(q));
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      const auto id = static_cast<VertexId>(x * q + y);
      bl.point_blocks[x][y] = id;
      bl.block_of[id] = x;
      bl.label_of[id] = y;
    }
  }
  for (std::uint32_t m = 0; m < q; ++m) {
    for (std::uint32_t c = 0; c < q; ++c) {
      const auto id = static_cast<VertexId>(half + m * q + c);
      bl.line_blocks[m][c] = id;
      bl.block_of[id] = m;
      bl.label_of[id] = c;
    }
  }
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      for (std::uint32_t m = 0; m < q; ++m) {
        // y = m x + b  =>  b = y - m x
        const FieldElem line_b = field.sub({y}, field.mul({m}, {x}));
        b.add_edge(bl.point_blocks[x][y], bl.line_blocks[m][line_b.code]);
      }
    }
  }
  bl.graph = std::move(b).build();
  return bl;
}

BlockedLevi build_Lq(const FieldSpec& field) {
  const std::uint32_t q = field.q();
  if (q < 3) throw std::invalid_argument("L_q needs q >= 3");
  const std::uint32_t size = q - 1;
  const auto dirs = directions(field);
  const std::size_t blocks = dirs.size();
  const std::size_t half = blocks * size;
  GraphBuilder b(2 * half);
  BlockedLevi bl{SemiplaneKind::L, field, {}, GroupSpec::cyclic(size), {}, {}, {}, {}, half};
  bl.block_of.resize(2 * half);
  bl.label_of.resize(2 * half);
  bl.point_blocks.assign(blocks, std::vector<VertexId>(size));
  bl.line_blocks.assign(blocks, std::vector<VertexId>(size));
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      const auto pid = static_cast<VertexId>(i * size + j);
      const auto lid = static_cast<VertexId>(half + i * size + j);
      bl.point_blocks[i][j] = pid;
      bl.line_blocks[i][j] = lid;
      bl.block_of[pid] = bl.block_of[lid] = static_cast<std::uint32_t>(i);
      bl.label_of[pid] = bl.label_of[lid] = j;
    }
  }
  for (std::size_t i = 0; i < blocks; ++i) {
    const auto [a, bb] = dirs[i];
    for (std::size_t k = 0; k < blocks; ++k) {
      const auto [c, d] = dirs[k];
      const FieldElem s = field.add(field.mul(a, c), field.mul(bb, d));
      if (s == field.zero()) continue;
      for (std::uint32_t e = 0; e < size; ++e) {
        const FieldElem mu = field.exp(e);
        // mu nu s = -1
        const FieldElem nu = field.neg(field.inv(field.mul(mu, s)));
        const std::uint32_t line_label = (size - field.log(nu)) % size;
        b.add_edge(bl.point_blocks[i][e], bl.line_blocks[k][line_label]);
      }
    }
  }
  bl.graph = std::move(b).build();
  return bl;
}

const BlockPairReport& BlockStructureReport::at(std::size_t point_block,
                                                std::size_t line_block) const {
  return pairs.at(point_block * line_block_count + line_block);
}

bool BlockStructureReport::all_pairs_matchings() const {
  for (const auto& p : pairs) {
    if (p.shape != PairShape::matching) return false;
  }
  return true;
}

bool BlockStructureReport::all_matchings_translations() const {
  for (const auto& p : pairs) {
    if (p.shape == PairShape::matching && p.affinity != Affinity::translation) return false;
  }
  return true;
}

bool BlockStructureReport::any_structural_failure() const {
  for (const auto& p : pairs) {
    if (p.shape == PairShape::partial || p.affinity == Affinity::non_affine) return true;
  }
  return false;
}

std::size_t BlockStructureReport::empty_partners(std::size_t point_block) const {
  std::size_t n = 0;
  for (const auto& p : pairs) {
    if (p.point_block == point_block && p.shape == PairShape::empty) ++n;
  }
  return n;
}

BlockStructureReport verify_block_structure(const BlockedLevi& bl) {
  BlockStructureReport report;
  report.line_block_count = bl.line_blocks.size();
  const GroupSpec& grp = bl.block_group;
  const std::size_t size = bl.block_size();
  constexpr GroupElem kNone = ~GroupElem{0};
  for (std::size_t i = 0; i < bl.point_blocks.size(); ++i) {
    // image[k][a]: label in line block k adjacent to the point labelled a.
    std::vector<std::vector<GroupElem>> image(bl.line_blocks.size(), std::vector<GroupElem>(size, kNone));
    std::vector<std::vector<std::size_t>> hits(bl.line_blocks.size(), std::vector<std::size_t>(size, 0));
    std::vector<bool> partial(bl.line_blocks.size(), false);
    for (std::size_t a = 0; a < size; ++a) {
      for (VertexId w : bl.graph.neighbors(bl.point_blocks[i][a])) {
        const std::size_t k = bl.block_of[w];
        if (image[k][a] != kNone) partial[k] = true;
        image[k][a] = bl.label_of[w];
        ++hits[k][bl.label_of[w]];
      }
    }
    for (std::size_t k = 0; k < bl.line_blocks.size(); ++k) {
      BlockPairReport r{i, k, PairShape::empty, Affinity::none, 0};
      std::size_t mapped = 0;
      for (std::size_t a = 0; a < size; ++a) mapped += image[k][a] != kNone;
      bool injective = true;
      for (std::size_t c : hits[k]) injective = injective && c <= 1;
      if (mapped == 0) {
        report.pairs.push_back(r);
        continue;
      }
      if (partial[k] || !injective || mapped != size) {
        r.shape = PairShape::partial;
        report.pairs.push_back(r);
        continue;
      }
      r.shape = PairShape::matching;
      const auto label = [&](std::size_t a) { return bl.label_of[bl.point_blocks[i][a]]; };
      bool translation = true;
      bool reflection = true;
      const GroupElem t0 = grp.sub(image[k][0], label(0));
      const GroupElem r0 = grp.add(image[k][0], label(0));
      for (std::size_t a = 1; a < size; ++a) {
        translation = translation && grp.sub(image[k][a], label(a)) == t0;
        reflection = reflection && grp.add(image[k][a], label(a)) == r0;
      }
      if (translation) {
        r.affinity = Affinity::translation;
        r.constant = t0;
      } else if (reflection) {
        r.affinity = Affinity::reflection;
        r.constant = r0;
      } else {
        r.affinity = Affinity::non_affine;
      }
      report.pairs.push_back(r);
    }
  }
  return report;
}

std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g) {
  if (k < 2 || g < 3) throw std::invalid_argument("moore_bound needs k >= 2 and g >= 3");
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  if (g % 2 == 1) {
    // 1 + k (1 + (k-1) + ... + (k-1)^{(g-3)/2})
    for (std::uint64_t i = 0; i <= (g - 3) / 2; ++i) {
      sum += term;
      term *= k - 1;
    }
    return 1 + k * sum;
  }
  for (std::uint64_t i = 0; i < g / 2; ++i) {
    sum += term;
    term *= k - 1;
  }
  return 2 * sum;
}

}  // namespace cage5

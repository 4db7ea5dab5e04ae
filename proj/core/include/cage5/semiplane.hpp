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

#include <cstdint>
#include <string>
#include <vector>

#include "cage5/field.hpp"
#include "cage5/graph.hpp"

namespace cage5 {

enum class SemiplaneKind { C, L };

std::string to_string(SemiplaneKind kind);

/// Levi graph of an elliptic semiplane together with its parallel classes.
///
/// Points come first (ids 0..points-1), then lines. Blocks are listed in
/// order and each block is indexed by in-block label: point_blocks[i][a] is
/// the vertex of block i carrying label a in block_group.
struct BlockedLevi {
  SemiplaneKind kind;
  FieldSpec field;
  LabeledGraph graph;
  GroupSpec block_group;
  std::vector<std::vector<VertexId>> point_blocks;
  std::vector<std::vector<VertexId>> line_blocks;
  std::vector<std::uint32_t> block_of;  // block index on the vertex's own side
  std::vector<GroupElem> label_of;
  std::size_t point_count = 0;

  bool is_point(VertexId v) const noexcept { return v < point_count; }
  std::size_t block_size() const noexcept { return point_blocks.empty() ? 0 : point_blocks[0].size(); }
};

/// C_q: points (x,y), lines (m,b), (x,y) ~ (m,b) iff y = m x + b. Point block
/// P_x holds (x, .) labelled by y; line block L_m holds (m, .) labelled by b.
BlockedLevi build_Cq(const FieldSpec& field);

/// L_q from PG(2,q) with the point (0:0:1) and the line z = 0 removed.
///
/// Points (x,y,1) != (0,0,1) and lines [u,v,1] != [0,0,1], incident iff
/// ux + vy + 1 = 0. Point block (a:b) holds (mu a, mu b, 1) labelled dlog(mu);
/// line block (c:d) holds [nu c, nu d, 1] labelled -dlog(nu) in Z_{q-1}, so every
/// nonempty point/line block pair is a translation. Directions are normalised
/// with first nonzero coordinate 1 and listed in code order. Requires q >= 3.
BlockedLevi build_Lq(const FieldSpec& field);

enum class PairShape { empty, matching, partial };
enum class Affinity { none, translation, reflection, non_affine };

struct BlockPairReport {
  std::size_t point_block = 0;
  std::size_t line_block = 0;
  PairShape shape = PairShape::empty;
  Affinity affinity = Affinity::none;
  /// c in line_label = point_label + c (translation) or -point_label + c.
  GroupElem constant = 0;
};

struct BlockStructureReport {
  std::vector<BlockPairReport> pairs;  // point-block major
  std::size_t line_block_count = 0;

  const BlockPairReport& at(std::size_t point_block, std::size_t line_block) const;
  bool all_pairs_matchings() const;
  bool all_matchings_translations() const;
  bool any_structural_failure() const;  // partial or non-affine pairs
  /// Number of empty line blocks for the given point block.
  std::size_t empty_partners(std::size_t point_block) const;
};

/// Classifies every point-block/line-block pair. Failures are reported, never
/// thrown.
BlockStructureReport verify_block_structure(const BlockedLevi& bl);

/// Moore bound n_0(k, g). Requires k >= 2, g >= 3.
std::uint64_t moore_bound(std::uint64_t k, std::uint64_t g);

}  // namespace cage5

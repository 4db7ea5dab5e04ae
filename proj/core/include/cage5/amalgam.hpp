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
#include <utility>
#include <vector>

#include "cage5/errors.hpp"
#include "cage5/field.hpp"
#include "cage5/graph.hpp"
#include "cage5/semiplane.hpp"

namespace cage5 {

struct SuitabilityReport {
  bool ok = false;
  std::size_t r = 0;       // common regularity when both graphs are regular
  std::string diagnostic;  // empty when ok
};

/// Two graphs labelled bijectively on `group` are suitable when both are
/// r-regular for the same r, have girth at least five and have disjoint
/// Cayley colours. Throws std::invalid_argument when a labelling is not a
/// bijection onto the carrier of `group`.
SuitabilityReport check_suitable_pair(const LabeledGraph& g0, const LabeledGraph& g1,
                                      const GroupSpec& group);

struct QuadrupleReport {
  bool ok = false;
  std::size_t r = 0;
  std::string clause;  // "i", "ii" or "iii" for the first violated hypothesis
  std::string diagnostic;
};

/// Checks the hypotheses for amalgamating (H0, H1, G0, G1) into C_q:
///  (i)   G_i labelled on all of F_q, (r, r+1)-regular, girth >= 5;
///  (ii)  V(H_i) = { v : deg_{G_j}(v) = r } (i != j), H_i r-regular with girth
///        >= 5, and V(H0) = V(H1) so that the amalgam is regular;
///  (iii) E(H0), E(H1) disjoint; E(H0), E(G1) disjoint; E(H1), E(G0)
///        disjoint; G0 and G1 colour-disjoint.
/// Regular G_i with H_i = G_i is the special case of a regular pair.
QuadrupleReport check_biregular_quadruple(const LabeledGraph& h0, const LabeledGraph& h1,
                                          const LabeledGraph& g0, const LabeledGraph& g1,
                                          const FieldSpec& field);

/// Result of an amalgamation, with the block structure kept for deletion.
struct Amalgam {
  SemiplaneKind kind = SemiplaneKind::C;
  std::uint32_t q = 0;
  std::size_t r = 0;
  std::size_t deleted = 0;
  LabeledGraph graph;
  std::vector<std::vector<VertexId>> point_blocks;
  std::vector<std::vector<VertexId>> line_blocks;
  /// (point block, line block) pairs in removal order.
  std::vector<std::pair<std::size_t, std::size_t>> deletion_pairs;

  std::size_t regularity() const noexcept { return q + r - deleted; }
};

/// C_q(H0, H1, G0, G1): drops the points (0,y), y not in V(H0), and lines
/// (0,b), b not in V(H1), then installs H0 on P'_0, H1 on L'_0, G0 on every
/// other point block and G1 on every other line block. Throws
/// VerificationError if the hypotheses fail or the result is not
/// (q+r)-regular with girth >= 5.
Amalgam amalgamate_C(const BlockedLevi& base, const LabeledGraph& h0, const LabeledGraph& h1,
                     const LabeledGraph& g0, const LabeledGraph& g1);

/// C_q(G0, G1) for a regular suitable pair.
Amalgam amalgamate_C(const BlockedLevi& base, const LabeledGraph& g0, const LabeledGraph& g1);

/// L_q(G0, G1): G0 in every point block, G1 in every line block, matched
/// through the block labels. Throws VerificationError if the pair is not
/// suitable over Z_{q-1} or the result is not (q+r)-regular with girth >= 5.
Amalgam amalgamate_L(const BlockedLevi& base, const LabeledGraph& g0, const LabeledGraph& g1);

/// Removes the first d entries of `deletion_pairs`. For C-kind amalgams these
/// are the highest-indexed point and line blocks other than block 0; for
/// L-kind each point block is removed with its unique disjoint line block.
/// The result is re-verified: regularity drops by exactly d and girth stays
/// >= 5. Throws std::invalid_argument when d exceeds the removable pairs.
Amalgam delete_block_pairs(const Amalgam& a, std::size_t d);

/// n(k,5) <= 2(q-1)(k-r+1) for r <= k <= q + r.
std::uint64_t bound_eq2(std::uint64_t q, std::uint64_t r, std::uint64_t k);
/// 2(q-1)(k-5) for k <= q + 6.
std::uint64_t bound_thm11(std::uint64_t q, std::uint64_t k);
/// 2q(k-6) for k <= q + 6.
std::uint64_t bound_thm12(std::uint64_t q, std::uint64_t k);
/// Order of C_q(H0,H1,G0,G1): 2(q^2 - q + |V(H0)|).
std::uint64_t biregular_amalgam_order(std::uint64_t q, std::uint64_t h0_order);

}  // namespace cage5

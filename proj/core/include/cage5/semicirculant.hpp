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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cage5/graph.hpp"

namespace cage5 {

/// The even offsets P (on even vertices) and Q (on odd vertices).
struct EvenOffsets {
  int p = 0;
  int q = 0;

  friend bool operator==(const EvenOffsets&, const EvenOffsets&) = default;
};

/// Parameters of a semicirculant graph S_2t(k_1..k_w) or S_2t(P,Q; k_1..k_w).
///
/// The vertex set is Z_2t (or Z when `order` is empty). Vertex 2v is joined to
/// 2v + k_i for every odd offset; with even offsets present, 2v is also joined
/// to 2v + P and 2v + 1 to 2v + 1 + Q.
struct SemicirculantSpec {
  std::optional<int> order;  // 2t; empty means the infinite graph over Z
  std::optional<EvenOffsets> evens;
  std::vector<int> odds;

  bool infinite() const noexcept { return !order.has_value(); }

  /// Text form "S:2t=28;P=4;Q=8;K=1,-1" ("2t=inf" for the infinite graph).
  std::string to_string() const;
  /// Throws std::invalid_argument on malformed text.
  static SemicirculantSpec parse(std::string_view text);

  friend bool operator==(const SemicirculantSpec&, const SemicirculantSpec&) = default;
};

/// Copy with every offset reduced to its representative in (-t, t]. The
/// infinite spec is returned unchanged.
SemicirculantSpec normalized(const SemicirculantSpec& spec);

/// S_2t(k_1..k_w) labelled by Z_2t. Requires an even order >= 10 and distinct
/// odd offsets.
LabeledGraph build_S(int order, const std::vector<int>& odds);

/// S_2t(P,Q; k_1..k_w) labelled by Z_2t. Requires distinct even 0 < P, Q < t.
LabeledGraph build_SPQ(const SemicirculantSpec& spec);

/// Pairwise differences k_i - k_j (i != j) are all distinct. Evaluated in Z_2t,
/// or in Z for the infinite spec. Even offsets are ignored.
bool girth6_condition(const SemicirculantSpec& spec);

/// The three girth-five conditions, evaluated separately.
struct GirthFiveConditions {
  bool multiples_nonzero = true;  // (i)   3P, 4P, 3Q, 4Q != 0
  bool odd_differences = true;    // (ii)  k_i - k_j pairwise distinct
  bool mixed_differences = true;  // (iii) no k_i - k_j equals w - w', w, w' in {0, +-P, +-Q}

  bool holds() const noexcept { return multiples_nonzero && odd_differences && mixed_differences; }
  /// Roman numeral of the first failing condition, or "" when all hold.
  std::string first_failure() const;
};

GirthFiveConditions girth5_conditions(const SemicirculantSpec& spec);

/// Largest element of {|k_i|, k_i - k_j, w - w'} for an infinite spec.
int span(const SemicirculantSpec& spec);

/// 2(D + 1) for span D. The girth-five conditions must hold over Z; every even
/// order from 2(D + 1) up to the point where no further residue collisions are
/// possible is re-checked, and a failure throws std::logic_error.
int min_valid_order(const SemicirculantSpec& spec);

/// Bits v_0..v_{m-1} of n (least significant first). Throws std::out_of_range
/// unless 0 <= n < 2^m.
std::vector<std::uint8_t> phi(unsigned m, std::uint64_t n);
std::uint64_t phi_inverse(const std::vector<std::uint8_t>& bits);
/// Bits written most significant first, e.g. "1001".
std::string bit_string(unsigned m, std::uint64_t n);

/// The semicirculant over Z_{2^m} carried to (Z_2)^m through phi: same vertex
/// codes and edges, colours now computed by XOR.
LabeledGraph build_barS(const SemicirculantSpec& spec);

/// 2^{m-d} disjoint copies of a graph g labelled on all of (Z_2)^d, placed on
/// (Z_2)^m: (u_high, a) ~ (u_high, b) iff ab is an edge of g. Requires m > d.
LabeledGraph lift_graph(const LabeledGraph& g, unsigned m);

}  // namespace cage5

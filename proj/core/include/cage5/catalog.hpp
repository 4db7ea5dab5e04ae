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
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cage5/graph.hpp"
#include "cage5/route.hpp"
#include "cage5/search.hpp"

namespace cage5 {

struct GraphPair {
  LabeledGraph g0;
  LabeledGraph g1;
};

/// Pairs over Z_{q-1} for q in {29, 31, 37, 41, 43, 47}. Throws
/// std::invalid_argument for other q.
GraphPair construction2_pair(std::uint32_t q);

/// The (5,5)-graph on (Z_2)^5 from its adjacency list and its relabelled
/// partner.
GraphPair q32_pair();

/// The 6-regular pair over Z_48.
GraphPair q49_pair();

/// alpha in S_{q-1}(2,4;3,-7,15,alpha): -23 for q = 59, 73, -25 for q = 61,
/// -21 otherwise.
int thm11_alpha(std::uint32_t q);

/// S_{q-1}(8,16;1,-1,5,-13) and S_{q-1}(2,4;3,-7,15,alpha) for an odd prime
/// power q >= 53. Throws std::invalid_argument otherwise, VerificationError if
/// the pair is not suitable.
GraphPair thm11_pair(std::uint32_t q);

/// barS_64(4,8;1,3,41,47) and its relabelled partner over (Z_2)^6, lifted to
/// (Z_2)^m for m > 6. Throws std::invalid_argument for m < 6.
GraphPair thm12_pair(unsigned m);

/// Data for the bi-regular quadruple search in F_q, q in {16, 17, 19}.
struct Construction1Constraints {
  std::uint32_t q = 0;
  std::size_t r = 3;
  std::set<GroupElem> high_degree;  // S, the degree-4 vertices of G0 and G1
  std::set<GroupElem> palette0;     // colours allowed in G0
  std::set<GroupElem> palette1;     // colours allowed in G1
  bool h_petersen = false;          // H0, H1 must be Petersen graphs
};

Construction1Constraints construction1_constraints(std::uint32_t q);

/// Relabelling tables perm[G0 label] = G1 label for q in {31, 32, 41, 49, 64}.
std::vector<GroupElem> relabel_table(std::uint32_t q);

/// Adjacency rows of the q = 32 graph in the order listed, first entry is the
/// vertex.
std::vector<std::vector<GroupElem>> q32_adjacency();

/// True when every embedded table matches its checksum.
bool embedded_data_intact();

/// Embedded text of a catalog file (e.g. "q32.adj"); throws
/// std::out_of_range for unknown names.
std::string_view embedded_file(std::string_view name);
std::vector<std::string> embedded_file_names();

/// The source-tree catalog when present, otherwise the installed copy.
std::filesystem::path default_catalog_dir();

struct RecordEntry {
  std::size_t k = 0;
  std::uint64_t order = 0;
  RouteDescriptor route;
};

/// The 29 expected records, ordered by k. Every order is checked against the
/// closed form of its route on load.
std::vector<RecordEntry> record_table();

/// n(k,5) <= coefficient * (k - r + 1) over k_min..k_max from L_q deletion.
struct ClosedForm {
  std::uint32_t q = 0;
  std::size_t r = 0;
  std::size_t k_min = 0;
  std::size_t k_max = 0;

  std::uint64_t coefficient() const noexcept { return 2 * (q - 1); }
  std::uint64_t value(std::size_t k) const;
  std::string to_string() const;  // e.g. "56(k-3)"
};

std::vector<ClosedForm> closed_form_table();

/// construction1 quadruple cache: "construction1-q<q>.cache" in `dir`.
std::string format_quadruple(std::uint32_t q, const Quadruple& quad);
/// Throws std::invalid_argument on malformed text.
Quadruple parse_quadruple(std::uint32_t q, std::string_view text);
std::optional<Quadruple> load_construction1(std::uint32_t q, const std::filesystem::path& dir);
/// Cached quadruple if present and valid, otherwise searches and writes the
/// cache. Throws std::runtime_error when the search fails.
Quadruple construction1_quadruple(std::uint32_t q, const std::filesystem::path& dir,
                                  std::uint64_t budget = kDefaultSearchBudget,
                                  bool allow_search = true);

}  // namespace cage5

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
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cage5/graph.hpp"

namespace cage5 {

enum class StructuralConstraint { none, petersen };

/// A graph to find on a labelled vertex set.
///
/// Vertices are the carrier labels; every vertex has degree r, except those in
/// high_degree which have degree r + 1. An edge ab is allowed when its colour
/// +-(a - b) is in the palette (any nonzero colour when the palette is empty)
/// and ab is not forbidden. Solutions have girth at least girth_floor.
struct SearchProblem {
  GroupSpec group = GroupSpec::cyclic(1);
  std::vector<GroupElem> carrier;
  std::size_t r = 0;
  std::set<GroupElem> high_degree;
  std::optional<std::set<GroupElem>> palette;
  std::vector<LabelEdge> forbidden;
  unsigned girth_floor = 5;
  StructuralConstraint structure = StructuralConstraint::none;
};

enum class SearchStatus { found, exhausted, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<LabeledGraph> graph;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Throws std::invalid_argument for ill-formed or evidently infeasible
/// problems: odd degree sum, zero in the palette, palette not closed under
/// negation, labels outside the carrier, more than 64 vertices, a structural
/// constraint whose parameters cannot match.
void validate_problem(const SearchProblem& p);

/// Enumerates solutions in a fixed order. The lowest vertex with a missing
/// degree picks its new neighbours in increasing label order; an edge uv is
/// admissible only while dist(u, v) >= girth_floor - 1. `visit` returns false
/// to stop. Returns `found` if it was stopped by the visitor, `exhausted` if
/// the space was fully explored, `budget_exceeded` after `budget` nodes.
SearchStatus for_each_solution(const SearchProblem& p, std::uint64_t budget,
                               const std::function<bool(const LabeledGraph&)>& visit,
                               std::uint64_t* nodes = nullptr);

/// First solution. The result is re-checked with girth/degree/palette
/// computations independent of the search state.
SearchResult search_graph(const SearchProblem& p, std::uint64_t budget = kDefaultSearchBudget);

/// Independent check that g solves p.
bool satisfies(const LabeledGraph& g, const SearchProblem& p);

/// (H0, H1, G0, G1) for the C_q amalgamation.
/// A search needed by a construction ended without a solution.
class SearchFailed : public std::runtime_error {
 public:
  SearchFailed(SearchStatus status, const std::string& what) : std::runtime_error(what), status_(status) {}
  SearchStatus status() const noexcept { return status_; }

 private:
  SearchStatus status_;
};

struct Quadruple {
  LabeledGraph h0;
  LabeledGraph h1;
  LabeledGraph g0;
  LabeledGraph g1;
};

struct QuadrupleSearchResult {
  std::optional<Quadruple> quadruple;
  SearchStatus status = SearchStatus::exhausted;
  std::string failed_stage;  // "G0", "G1", "H0" or "H1" when not found
  std::uint64_t nodes = 0;
};

/// Nested search over the stages G0, G1, H0 (on F_q - S, avoiding E(G1)), H1
/// (avoiding E(H0) and E(G0)); each stage backtracks into the previous one if
/// it has no solution. `budget` bounds every stage invocation.
QuadrupleSearchResult search_quadruple(std::uint32_t q,
                                       std::uint64_t budget = kDefaultSearchBudget);

struct RelabelResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<std::vector<GroupElem>> perm;  // perm[old label] = new label
  std::uint64_t nodes = 0;
};

/// A bijection of the carrier such that relabel(g0, perm) has no Cayley
/// colour in `forbidden` (taken closed under negation). Labels are tried own
/// label first, then in increasing order, so a feasible identity is returned
/// as is. Requires g0 labelled on the full carrier of at most 64 elements.
RelabelResult search_relabel_partner(const LabeledGraph& g0, const std::set<GroupElem>& forbidden,
                                     std::uint64_t budget = kDefaultSearchBudget);

}  // namespace cage5

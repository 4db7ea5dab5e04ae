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


#include "cage5/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <fmt/format.h>

#include "cage5/amalgam.hpp"
#include "cage5/catalog.hpp"

namespace cage5 {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

class GraphSearch {
 public:
  enum class Outcome { more, stop, budget };

  GraphSearch(const SearchProblem& p, std::uint64_t budget,
              const std::function<bool(const LabeledGraph&)>& visit)
      : p_(p), n_(p.carrier.size()), budget_(budget), visit_(visit) {
    labels_ = p.carrier;
    std::sort(labels_.begin(), labels_.end());
    allowed_.assign(n_, 0);
    adj_.assign(n_, 0);
    deficit_.assign(n_, 0);
    std::set<LabelEdge> forbidden;
    for (auto [a, b] : p.forbidden) forbidden.emplace(std::min(a, b), std::max(a, b));
    for (std::size_t i = 0; i < n_; ++i) {
      deficit_[i] = p.r + (p.high_degree.contains(labels_[i]) ? 1 : 0);
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        const GroupElem c = p.group.sub(labels_[i], labels_[j]);
        if (p.palette && !p.palette->contains(c)) continue;
        if (forbidden.contains({std::min(labels_[i], labels_[j]), std::max(labels_[i], labels_[j])})) {
          continue;
        }
        allowed_[i] |= bit(j);
      }
    }
    radius_ = p.girth_floor >= 2 ? p.girth_floor - 2 : 0;
  }

  Outcome run() { return fill(); }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Mask ball(std::size_t u) const {
    Mask reach = bit(u);
    Mask frontier = reach;
    for (unsigned d = 0; d < radius_ && frontier; ++d) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= ~reach;
      reach |= next;
      frontier = next;
    }
    return reach;
  }

  Mask open_vertices() const {
    Mask m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (deficit_[i] > 0) m |= bit(i);
    }
    return m;
  }

  Mask candidates(std::size_t u, Mask open) const {
    return allowed_[u] & ~adj_[u] & open & ~ball(u);
  }

  bool forward_ok() const {
    const Mask open = open_vertices();
    for (Mask f = open; f; f &= f - 1) {
      const std::size_t u = std::countr_zero(f);
      if (static_cast<std::size_t>(std::popcount(candidates(u, open))) < deficit_[u]) return false;
    }
    return true;
  }

  Outcome fill() {
    std::size_t v = n_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (deficit_[i] > 0) {
        v = i;
        break;
      }
    }
    if (v == n_) return emit();
    return choose(v, 0);
  }

  Outcome choose(std::size_t v, std::size_t from) {
    if (deficit_[v] == 0) return forward_ok() ? fill() : Outcome::more;
    Mask cand = candidates(v, open_vertices()) & ~(bit(from) - 1);
    if (static_cast<std::size_t>(std::popcount(cand)) < deficit_[v]) return Outcome::more;
    for (; cand; cand &= cand - 1) {
      if (++nodes_ > budget_) return Outcome::budget;
      const std::size_t w = std::countr_zero(cand);
      adj_[v] |= bit(w);
      adj_[w] |= bit(v);
      --deficit_[v];
      --deficit_[w];
      const Outcome o = choose(v, w + 1);
      adj_[v] &= ~bit(w);
      adj_[w] &= ~bit(v);
      ++deficit_[v];
      ++deficit_[w];
      if (o != Outcome::more) return o;
    }
    return Outcome::more;
  }

  Outcome emit() {
    GraphBuilder b(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Mask f = adj_[i] & ~(bit(i + 1) - 1); f; f &= f - 1) {
        b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(std::countr_zero(f)));
      }
    }
    b.set_labels(p_.group, labels_);
    const LabeledGraph g = std::move(b).build();
    if (!satisfies(g, p_)) throw std::logic_error("search produced a graph violating its problem");
    return visit_(g) ? Outcome::more : Outcome::stop;
  }

  const SearchProblem& p_;
  std::size_t n_;
  std::uint64_t budget_;
  const std::function<bool(const LabeledGraph&)>& visit_;
  std::vector<GroupElem> labels_;
  std::vector<Mask> allowed_;
  std::vector<Mask> adj_;
  std::vector<std::size_t> deficit_;
  unsigned radius_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

void validate_problem(const SearchProblem& p) {
  const std::set<GroupElem> carrier(p.carrier.begin(), p.carrier.end());
  if (carrier.size() != p.carrier.size()) throw std::invalid_argument("carrier has repeated labels");
  if (p.carrier.size() > 64) throw std::invalid_argument("search handles at most 64 vertices");
  for (GroupElem a : carrier) {
    if (!p.group.contains(a)) throw std::invalid_argument("carrier label outside the group");
  }
  for (GroupElem a : p.high_degree) {
    if (!carrier.contains(a)) throw std::invalid_argument("degree-(r+1) vertex outside the carrier");
  }
  if (p.palette) {
    for (GroupElem c : *p.palette) {
      if (c == p.group.zero()) throw std::invalid_argument("palette contains zero");
      if (!p.group.contains(c) || !p.palette->contains(p.group.neg(c))) {
        throw std::invalid_argument("palette is not closed under negation");
      }
    }
  }
  for (auto [a, b] : p.forbidden) {
    if (!p.group.contains(a) || !p.group.contains(b)) {
      throw std::invalid_argument("forbidden edge outside the group");
    }
  }
  const std::size_t n = p.carrier.size();
  if ((n * p.r + p.high_degree.size()) % 2 != 0) {
    throw std::invalid_argument("degree sum is odd");
  }
  if (n > 0 && p.r + (p.high_degree.empty() ? 0 : 1) >= n) {
    throw std::invalid_argument("degree exceeds the number of other vertices");
  }
  if (p.girth_floor < 3) throw std::invalid_argument("girth floor must be at least 3");
  if (p.structure == StructuralConstraint::petersen &&
      (n != 10 || p.r != 3 || !p.high_degree.empty() || p.girth_floor > 5)) {
    throw std::invalid_argument("a Petersen graph has 10 vertices, degree 3 and girth 5");
  }
}

bool satisfies(const LabeledGraph& g, const SearchProblem& p) {
  if (!g.group() || !(*g.group() == p.group)) return false;
  std::set<GroupElem> carrier(p.carrier.begin(), p.carrier.end());
  if (g.order() != carrier.size()) return false;
  for (VertexId v = 0; v < g.order(); ++v) {
    const GroupElem a = g.label(v);
    if (!carrier.contains(a)) return false;
    if (g.degree(v) != p.r + (p.high_degree.contains(a) ? 1 : 0)) return false;
  }
  if (p.palette) {
    for (GroupElem c : cayley_colors(g)) {
      if (!p.palette->contains(c)) return false;
    }
  }
  std::set<LabelEdge> forbidden;
  for (auto [a, b] : p.forbidden) forbidden.emplace(std::min(a, b), std::max(a, b));
  for (const auto& e : label_edges(g)) {
    if (forbidden.contains(e)) return false;
  }
  const auto gi = girth(g);
  if (gi && *gi < p.girth_floor) return false;
  if (p.structure == StructuralConstraint::petersen && (g.order() != 10 || !is_regular(g, 3) || gi != 5u)) {
    return false;
  }
  return true;
}

SearchStatus for_each_solution(const SearchProblem& p, std::uint64_t budget,
                               const std::function<bool(const LabeledGraph&)>& visit,
                               std::uint64_t* nodes) {
  validate_problem(p);
  GraphSearch s(p, budget, visit);
  const auto o = s.run();
  if (nodes) *nodes = s.nodes();
  switch (o) {
    case GraphSearch::Outcome::stop: return SearchStatus::found;
    case GraphSearch::Outcome::budget: return SearchStatus::budget_exceeded;
    case GraphSearch::Outcome::more: break;
  }
  return SearchStatus::exhausted;
}

SearchResult search_graph(const SearchProblem& p, std::uint64_t budget) {
  SearchResult res;
  res.status = for_each_solution(
      p, budget,
      [&res](const LabeledGraph& g) {
        res.graph = g;
        return false;
      },
      &res.nodes);
  return res;
}

QuadrupleSearchResult search_quadruple(std::uint32_t q, std::uint64_t budget) {
  const Construction1Constraints c = construction1_constraints(q);
  const FieldSpec field = make_field_of_order(q);
  const GroupSpec group = field.additive_group();

  std::vector<GroupElem> all(q);
  for (GroupElem a = 0; a < q; ++a) all[a] = a;
  std::vector<GroupElem> rest;
  for (GroupElem a = 0; a < q; ++a) {
    if (!c.high_degree.contains(a)) rest.push_back(a);
  }

  SearchProblem pg0{group, all, c.r, c.high_degree, c.palette0, {}, 5, StructuralConstraint::none};
  SearchProblem pg1{group, all, c.r, c.high_degree, c.palette1, {}, 5, StructuralConstraint::none};
  const auto h_structure = c.h_petersen ? StructuralConstraint::petersen : StructuralConstraint::none;
  SearchProblem ph0{group, rest, c.r, {}, std::nullopt, {}, 5, h_structure};
  SearchProblem ph1 = ph0;

  QuadrupleSearchResult res;
  res.failed_stage = "G0";
  std::uint64_t nodes = 0;
  auto give_up = [&res](const char* stage) {
    res.status = SearchStatus::budget_exceeded;
    res.failed_stage = stage;
    return false;
  };
  bool over_budget = false;

  const auto st = for_each_solution(
      pg0, budget,
      [&](const LabeledGraph& g0) {
        if (res.failed_stage == "G0") res.failed_stage = "G1";
        const auto st1 = for_each_solution(
            pg1, budget,
            [&](const LabeledGraph& g1) {
              if (res.failed_stage == "G1") res.failed_stage = "H0";
              ph0.forbidden = label_edges(g1);
              const auto st2 = for_each_solution(
                  ph0, budget,
                  [&](const LabeledGraph& h0) {
                    if (res.failed_stage == "H0") res.failed_stage = "H1";
                    ph1.forbidden = label_edges(h0);
                    const auto eg0 = label_edges(g0);
                    ph1.forbidden.insert(ph1.forbidden.end(), eg0.begin(), eg0.end());
                    const auto h1 = search_graph(ph1, budget);
                    nodes += h1.nodes;
                    if (h1.status == SearchStatus::budget_exceeded) {
                      over_budget = true;
                      return give_up("H1");
                    }
                    if (!h1.graph) return true;
                    const auto rep = check_biregular_quadruple(h0, *h1.graph, g0, g1, field);
                    if (!rep.ok) return true;
                    res.quadruple = Quadruple{h0, *h1.graph, g0, g1};
                    return false;
                  },
                  &nodes);
              if (res.quadruple || over_budget) return false;
              if (st2 == SearchStatus::budget_exceeded) {
                over_budget = true;
                return give_up("H0");
              }
              return true;
            },
            &nodes);
        if (res.quadruple || over_budget) return false;
        if (st1 == SearchStatus::budget_exceeded) {
          over_budget = true;
          return give_up("G1");
        }
        return true;
      },
      &nodes);
  res.nodes = nodes;
  if (res.quadruple) {
    res.status = SearchStatus::found;
    res.failed_stage.clear();
  } else if (!over_budget && st == SearchStatus::budget_exceeded) {
    give_up("G0");
  } else if (!over_budget) {
    res.status = SearchStatus::exhausted;
  }
  return res;
}

RelabelResult search_relabel_partner(const LabeledGraph& g0, const std::set<GroupElem>& forbidden,
                                     std::uint64_t budget) {
  if (!g0.group()) throw std::invalid_argument("relabel search needs a labelled graph");
  const GroupSpec& group = *g0.group();
  const std::size_t n = g0.order();
  if (n != group.order() || !g0.labels_cover_group()) {
    throw std::invalid_argument("relabel search needs a labelling of the full carrier");
  }
  if (n > 64) throw std::invalid_argument("relabel search handles at most 64 labels");

  // bad[a]: labels b with +-(b - a) forbidden, or b == a.
  std::vector<Mask> bad(n, 0);
  for (GroupElem a = 0; a < n; ++a) {
    bad[a] |= bit(a);
    for (GroupElem f : forbidden) {
      if (!group.contains(f)) continue;
      bad[a] |= bit(group.add(a, f)) | bit(group.sub(a, f));
    }
  }
  const Mask full = n == 64 ? ~Mask{0} : bit(n) - 1;

  RelabelResult res;
  std::vector<GroupElem> assigned(n, 0);
  std::vector<bool> done(n, false);
  std::vector<Mask> domain(n, full);

  std::function<int(std::size_t)> go = [&](std::size_t depth) -> int {
    if (depth == n) return 1;
    // Most constrained unassigned vertex, lowest id on ties.
    std::size_t v = n;
    int best = 65;
    for (std::size_t u = 0; u < n; ++u) {
      if (done[u]) continue;
      const int c = std::popcount(domain[u]);
      if (c < best) {
        best = c;
        v = u;
      }
    }
    if (best == 0) return 0;
    const GroupElem own = g0.label(static_cast<VertexId>(v));
    std::vector<GroupElem> order;
    if (domain[v] & bit(own)) order.push_back(own);
    for (Mask f = domain[v] & ~bit(own); f; f &= f - 1) order.push_back(std::countr_zero(f));

    for (GroupElem a : order) {
      if (++res.nodes > budget) return -1;
      std::vector<std::pair<std::size_t, Mask>> saved;
      bool dead = false;
      for (std::size_t u = 0; u < n; ++u) {
        if (done[u] || u == v) continue;
        Mask nd = domain[u] & ~bit(a);
        if (g0.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v))) nd &= ~bad[a];
        if (nd != domain[u]) {
          saved.emplace_back(u, domain[u]);
          domain[u] = nd;
        }
        if (nd == 0) dead = true;
      }
      done[v] = true;
      assigned[v] = a;
      const int r = dead ? 0 : go(depth + 1);
      done[v] = false;
      for (auto [u, m] : saved) domain[u] = m;
      if (r != 0) return r;
    }
    return 0;
  };

  const int r = go(0);
  if (r == 1) {
    std::vector<GroupElem> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[g0.label(v)] = assigned[v];
    res.perm = std::move(perm);
    res.status = SearchStatus::found;
  } else {
    res.status = r < 0 ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
  }
  return res;
}

}  // namespace cage5

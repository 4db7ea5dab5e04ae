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


#include <doctest.h>

#include "cage5/semiplane.hpp"
#include "support/oracles.hpp"

using namespace cage5;

TEST_CASE("C_q shape") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto c = build_Cq(make_field_of_order(q));
    CHECK(c.kind == SemiplaneKind::C);
    CHECK(c.graph.order() == 2 * q * q);
    CHECK(is_regular(c.graph, q));
    CHECK(c.point_blocks.size() == q);
    CHECK(c.line_blocks.size() == q);
    CHECK(c.block_size() == q);
    if (q >= 3) {
      CHECK(girth(c.graph) == 6u);
    } else {
      CHECK(girth(c.graph) == 8u);
      CHECK(connected_components(c.graph) == 1);
    }
  }
  CHECK(build_Cq(make_field_of_order(16)).graph.order() == 512);
}

TEST_CASE("C_q incidence is y = m x + b") {
  const FieldSpec f = make_field_of_order(5);
  const auto c = build_Cq(f);
  for (std::uint32_t x = 0; x < 5; ++x) {
    for (std::uint32_t y = 0; y < 5; ++y) {
      for (std::uint32_t m = 0; m < 5; ++m) {
        for (std::uint32_t b = 0; b < 5; ++b) {
          const bool inc = f.add(f.mul(f.elem(m), f.elem(x)), f.elem(b)) == f.elem(y);
          CHECK(c.graph.has_edge(c.point_blocks[x][y], c.line_blocks[m][b]) == inc);
        }
      }
    }
  }
}

TEST_CASE("C_q block pairs are translations by -m x") {
  for (std::uint32_t q : {2u, 4u, 5u, 9u}) {
    const FieldSpec f = make_field_of_order(q);
    const auto c = build_Cq(f);
    const auto rep = verify_block_structure(c);
    CHECK(rep.all_pairs_matchings());
    CHECK(rep.all_matchings_translations());
    CHECK_FALSE(rep.any_structural_failure());
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t m = 0; m < q; ++m) {
        const auto& pr = rep.at(x, m);
        CHECK(pr.shape == PairShape::matching);
        CHECK(pr.constant == f.neg(f.mul(f.elem(m), f.elem(x))).code);
      }
    }
  }
}

TEST_CASE("L_q shape and blocks") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    const auto l = build_Lq(make_field_of_order(q));
    CHECK(l.kind == SemiplaneKind::L);
    CHECK(l.graph.order() == 2 * (q * q - 1));
    CHECK(is_regular(l.graph, q));
    CHECK(l.point_blocks.size() == q + 1);
    CHECK(l.line_blocks.size() == q + 1);
    CHECK(l.block_size() == q - 1);
    CHECK(l.block_group == GroupSpec::cyclic(q - 1));
    const auto g = girth(l.graph);
    CHECK((g && *g >= 6));
    const auto rep = verify_block_structure(l);
    CHECK_FALSE(rep.any_structural_failure());
    CHECK(rep.all_matchings_translations());
    for (std::size_t i = 0; i <= q; ++i) {
      CHECK(rep.empty_partners(i) == 1);
      std::size_t matchings = 0;
      for (std::size_t j = 0; j <= q; ++j) matchings += rep.at(i, j).shape == PairShape::matching;
      CHECK(matchings == q);
    }
  }
  const auto l3 = build_Lq(make_field_of_order(3));
  CHECK(l3.graph.order() == 16);
  CHECK(l3.point_blocks.size() == 4);
  CHECK(l3.point_blocks[0].size() == 2);
  CHECK_THROWS(build_Lq(make_field_of_order(2)));
}

TEST_CASE("Levi graphs are bipartite between points and lines") {
  for (const auto& bl : {build_Cq(make_field_of_order(8)), build_Lq(make_field_of_order(7))}) {
    for (const Edge& e : bl.graph.edges()) CHECK(bl.is_point(e.u) != bl.is_point(e.v));
    for (std::size_t i = 0; i < bl.point_blocks.size(); ++i) {
      for (std::size_t a = 0; a < bl.point_blocks[i].size(); ++a) {
        const VertexId v = bl.point_blocks[i][a];
        CHECK(bl.is_point(v));
        CHECK(bl.block_of[v] == i);
        CHECK(bl.label_of[v] == a);
      }
    }
  }
}

TEST_CASE("L_29 order") {
  const auto l = build_Lq(make_field_of_order(29));
  CHECK(l.graph.order() == 1680);
  CHECK(is_regular(l.graph, 29));
}

TEST_CASE("moore bound") {
  CHECK(moore_bound(3, 5) == 10);
  CHECK(moore_bound(7, 5) == 50);
  CHECK(moore_bound(3, 6) == 14);
  CHECK(moore_bound(57, 5) == 3250);
  for (std::uint64_t k = 2; k <= 100; ++k) CHECK(moore_bound(k, 5) == 1 + k * k);
  CHECK(moore_bound(3, 3) == 4);
  CHECK(moore_bound(3, 4) == 6);
  CHECK_THROWS(moore_bound(1, 5));
  CHECK_THROWS(moore_bound(3, 2));
}

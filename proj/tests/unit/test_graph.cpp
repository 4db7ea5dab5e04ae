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

#include <random>
#include <stdexcept>

#include "cage5/graph.hpp"
#include "cage5/io.hpp"
#include "cage5/semicirculant.hpp"
#include "support/oracles.hpp"

using namespace cage5;

TEST_CASE("girth of small named graphs") {
  CHECK(girth(oracle::cycle(5)) == 5u);
  CHECK(girth(oracle::petersen()) == 5u);
  CHECK(girth(oracle::complete(4)) == 3u);
  CHECK(girth(build_S(14, {1, -1, 5})) == 6u);
  CHECK_FALSE(girth(oracle::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
  CHECK_FALSE(girth(GraphBuilder(0).build()).has_value());
}

TEST_CASE("girth agrees with the edge-deletion oracle on random graphs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 30;
    const double p = 0.05 + 0.25 * (rng() % 100) / 100.0;
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (coin(rng)) b.add_edge(u, v);
      }
    }
    const LabeledGraph g = std::move(b).build();
    CAPTURE(trial);
    CHECK(girth(g) == oracle::girth_by_edge_deletion(g));
  }
}

TEST_CASE("girth never drops under vertex deletion") {
  std::mt19937 rng(7);
  const LabeledGraph g = build_SPQ(SemicirculantSpec::parse("S:2t=40;P=8;Q=16;K=1,-1,5,-13"));
  const auto base = girth(g);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<bool> keep(g.order(), true);
    for (int i = 0; i < 5; ++i) keep[rng() % g.order()] = false;
    const auto sub = girth(induced_subgraph(g, keep));
    CHECK((!sub || *sub >= *base));
  }
}

TEST_CASE("degree profile") {
  CHECK(degree_profile(oracle::petersen()) == DegreeProfile{{3, 10}});
  CHECK(degree_profile(GraphBuilder(6).build()) == DegreeProfile{{0, 6}});
  CHECK(is_regular(oracle::petersen(), 3));
  CHECK_FALSE(is_regular(oracle::petersen(), 4));
  const auto path = oracle::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(is_biregular(path, 1, 2));
  CHECK_FALSE(regularity(path).has_value());
}

TEST_CASE("diameter") {
  CHECK(diameter(oracle::complete(4)) == 1);
  CHECK(diameter(oracle::petersen()) == 2);
  const auto heawood = build_S(14, {1, -1, 5});
  CHECK(diameter(heawood) == static_cast<std::size_t>(oracle::diameter_by_floyd(heawood)));
  CHECK_THROWS_AS(diameter(oracle::from_edges(4, {{0, 1}, {2, 3}})), std::domain_error);
  CHECK(connected_components(oracle::from_edges(5, {{0, 1}, {2, 3}})) == 3);
}

TEST_CASE("builder rejects malformed input") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::out_of_range);
  b.add_edge(0, 1).add_edge(1, 0);
  CHECK_THROWS_AS(std::move(b).build(), std::invalid_argument);
  GraphBuilder c(2);
  CHECK_THROWS(c.set_labels(GroupSpec::cyclic(4), {1, 1}));
  CHECK_THROWS(c.set_labels(GroupSpec::cyclic(4), {1, 4}));
}

TEST_CASE("cayley colours") {
  const auto p = oracle::with_cyclic_labels(oracle::petersen());
  const auto colors = cayley_colors(p);
  CHECK_FALSE(colors.contains(0));
  for (GroupElem c : colors) CHECK(colors.contains(p.group()->neg(c)));
  CHECK(cayley_colors(translate_labels(p, 3)) == colors);
  CHECK_FALSE(colors_disjoint(p, p));
  CHECK(cayley_colors(oracle::with_cyclic_labels(GraphBuilder(5).build())).empty());
  CHECK_THROWS(cayley_colors(oracle::petersen()));
  CHECK_THROWS(colors_disjoint(p, oracle::with_cyclic_labels(oracle::cycle(5))));

  const auto c5 = oracle::with_cyclic_labels(oracle::cycle(5));
  CHECK(cayley_colors(c5) == std::set<GroupElem>{1, 4});
}

TEST_CASE("relabel and label edges") {
  const auto c5 = oracle::with_cyclic_labels(oracle::cycle(5));
  const auto r = relabel(c5, {0, 2, 4, 1, 3});
  CHECK(cayley_colors(r) == std::set<GroupElem>{2, 3});
  CHECK(label_edges(r).size() == 5);
  CHECK(r.vertex_with_label(4) == VertexId{2});
  CHECK_THROWS(relabel(c5, {0, 0, 1, 2, 3}));
  const auto g = graph_from_label_edges(GroupSpec::cyclic(7), {3, 5, 6}, {{3, 5}, {6, 5}});
  CHECK(g.order() == 3);
  CHECK(label_edges(g) == std::vector<LabelEdge>{{3, 5}, {5, 6}});
  CHECK_FALSE(g.labels_cover_group());
}

TEST_CASE("graph6 reference strings") {
  CHECK(to_graph6(oracle::petersen()) == "IheA@GUAo");
  CHECK(to_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(to_graph6(oracle::complete(4)) == "C~");
  CHECK(to_graph6(GraphBuilder(1).build()) == "@");
  CHECK(to_graph6(GraphBuilder(0).build()) == "?");
  CHECK(to_graph6(build_S(14, {1, -1, 5})) == "MhEGHC@AI?_PC@_G_");
  const std::string c70 =
      "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C?"
      "???@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@??????"
      "?G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C??"
      "??????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C"
      "??????????G??????????G??????????C??????????@_??????????G";
  CHECK(to_graph6(oracle::cycle(70)) == c70);
  CHECK(from_graph6(c70).order() == 70);
  CHECK(is_regular(from_graph6(c70), 2));
}

TEST_CASE("graph6 round trips") {
  for (const auto& g : {oracle::petersen(), oracle::cycle(5), GraphBuilder(1).build(),
                        build_S(14, {1, -1, 5}), oracle::cycle(70), oracle::complete(9)}) {
    const auto back = from_graph6(to_graph6(g));
    CHECK(back.edges() == g.edges());
    CHECK(back.order() == g.order());
  }
  const auto c5 = from_graph6("Dhc\n");
  CHECK(is_regular(c5, 2));
  CHECK(girth(c5) == 5u);
  CHECK(from_graph6(">>graph6<<IheA@GUAo").edges() == oracle::petersen().edges());
}

TEST_CASE("the string DQc is a path, not a cycle") {
  const auto g = from_graph6("DQc");
  CHECK(g.order() == 5);
  CHECK(g.size() == 4);
  CHECK_FALSE(regularity(g).has_value());
  CHECK_FALSE(girth(g).has_value());
}

TEST_CASE("graph6 rejects malformed text") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Dh"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Dhcc"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("D h"), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("Dhd"), std::invalid_argument);  // padding bits set
}

TEST_CASE("json round trip keeps labels") {
  const auto g = build_S(14, {1, -1, 5});
  const auto back = from_json(to_json(g));
  CHECK(back.edges() == g.edges());
  REQUIRE(back.group().has_value());
  CHECK(*back.group() == GroupSpec::cyclic(14));
  CHECK(back.label(3) == g.label(3));
  CHECK(from_json(to_json(oracle::petersen())).edges() == oracle::petersen().edges());
  CHECK_THROWS(from_json("{\"n\": 2, \"edges\": [[0, 2]]}"));
}

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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cage5/amalgam.hpp"
#include "cage5/catalog.hpp"
#include "cage5/errors.hpp"
#include "cage5/semicirculant.hpp"

using namespace cage5;

namespace {

std::set<GroupElem> pm(std::uint32_t n, std::initializer_list<int> xs) {
  std::set<GroupElem> out;
  for (int x : xs) {
    out.insert(static_cast<GroupElem>((x % static_cast<int>(n) + static_cast<int>(n)) % static_cast<int>(n)));
    out.insert(static_cast<GroupElem>((-x % static_cast<int>(n) + static_cast<int>(n)) % static_cast<int>(n)));
  }
  return out;
}

std::set<GroupElem> all_but(std::uint32_t n, const std::set<GroupElem>& drop) {
  std::set<GroupElem> out;
  for (GroupElem a = 0; a < n; ++a) {
    if (!drop.contains(a)) out.insert(a);
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledGraph spq(int n, int p, int q, std::vector<int> odds) {
  SemicirculantSpec s;
  s.order = n;
  s.evens = EvenOffsets{p, q};
  s.odds = std::move(odds);
  return build_SPQ(s);
}

}  // namespace

TEST_CASE("construction2 pairs") {
  const auto p29 = construction2_pair(29);
  CHECK(is_regular(p29.g0, 4));
  CHECK(cayley_colors(p29.g0) == pm(28, {1, 4, 8}));
  CHECK(cayley_colors(p29.g1) == pm(28, {2, 3, 6, 7}));
  CHECK(colors_disjoint(p29.g0, p29.g1));

  const auto p31 = construction2_pair(31);
  auto drop = pm(30, {1, 6, 9, 12});
  drop.insert(0);
  CHECK(cayley_colors(p31.g1) == all_but(30, drop));
  CHECK(colors_disjoint(p31.g0, p31.g1));
  CHECK(is_regular(p31.g1, 5));
  CHECK(girth(p31.g1) == 5u);

  for (std::uint32_t q : {37u, 43u, 47u}) {
    const auto p = construction2_pair(q);
    CHECK(is_regular(p.g0, 5));
    CHECK(is_regular(p.g1, 5));
    CHECK(p.g0.order() == q - 1);
  }
  const auto p41 = construction2_pair(41);
  CHECK(is_regular(p41.g1, 6));
  CHECK(girth(p41.g0) == 5u);
  CHECK(p41.g0.order() == 40);
  CHECK(colors_disjoint(p41.g0, p41.g1));
  CHECK_THROWS_AS(construction2_pair(30), std::invalid_argument);
  CHECK_THROWS_AS(construction2_pair(53), std::invalid_argument);
}

TEST_CASE("q = 32 pair") {
  const auto p = q32_pair();
  const auto v0 = p.g0.vertex_with_label(0);
  REQUIRE(v0.has_value());
  std::set<GroupElem> nb;
  for (VertexId w : p.g0.neighbors(*v0)) nb.insert(p.g0.label(w));
  CHECK(nb == std::set<GroupElem>{0b10000, 0b11010, 0b11100, 0b00001, 0b11111});
  CHECK(is_regular(p.g0, 5));
  CHECK(girth(p.g0) == 5u);
  const std::set<GroupElem> w0{0b00001, 0b01001, 0b10000, 0b11010, 0b11011,
                               0b11100, 0b11101, 0b11110, 0b11111};
  CHECK(cayley_colors(p.g0) == w0);
  auto drop = w0;
  drop.insert(0);
  drop.insert(0b00110);
  CHECK(cayley_colors(p.g1) == all_but(32, drop));
  CHECK(colors_disjoint(p.g0, p.g1));
  CHECK(q32_adjacency().size() == 32);
}

TEST_CASE("q = 49 pair") {
  const auto p = q49_pair();
  CHECK(degree_profile(p.g0) == DegreeProfile{{6, 48}});
  CHECK(girth(p.g0) == 5u);
  const auto w0 = pm(48, {1, 5, 8, 13, 16, 24});
  CHECK(cayley_colors(p.g0) == w0);
  auto drop = w0;
  drop.insert(0);
  CHECK(cayley_colors(p.g1) == all_but(48, drop));
  CHECK(is_regular(p.g1, 6));
  CHECK(girth(p.g1) == 5u);
  CHECK(colors_disjoint(p.g0, p.g1));
}

TEST_CASE("thm11 pairs") {
  for (std::uint32_t q : {53u, 59u, 61u, 67u, 71u, 73u, 79u, 81u, 83u}) {
    CAPTURE(q);
    const auto p = thm11_pair(q);
    CHECK(p.g0.order() == q - 1);
    CHECK(check_suitable_pair(p.g0, p.g1, GroupSpec::cyclic(q - 1)).ok);
  }
  CHECK(thm11_alpha(61) == -25);
  CHECK(thm11_alpha(59) == -23);
  CHECK(thm11_alpha(73) == -23);
  CHECK(thm11_alpha(53) == -21);
  CHECK(thm11_pair(61).g1.has_edge(*thm11_pair(61).g1.vertex_with_label(0),
                                    *thm11_pair(61).g1.vertex_with_label(60 - 25)));
  // The default alpha fails exactly where an exception is listed.
  for (std::uint32_t q : {59u, 61u, 73u}) {
    const int n = static_cast<int>(q) - 1;
    const auto rep = check_suitable_pair(spq(n, 8, 16, {1, -1, 5, -13}), spq(n, 2, 4, {3, -7, 15, -21}),
                                         GroupSpec::cyclic(q - 1));
    CHECK_FALSE(rep.ok);
  }
  CHECK_THROWS_AS(thm11_pair(49), std::invalid_argument);
  CHECK_THROWS_AS(thm11_pair(64), std::invalid_argument);
  CHECK_THROWS_AS(thm11_pair(55), std::invalid_argument);
}

TEST_CASE("thm12 pairs") {
  const auto p6 = thm12_pair(6);
  const std::set<GroupElem> w0{1, 3, 4, 7, 8, 12, 15, 19, 23, 24, 25, 28, 31, 41, 47, 51, 55, 56, 57, 60, 63};
  CHECK(cayley_colors(p6.g0) == w0);
  auto drop = w0;
  drop.insert(0);
  drop.insert(50);
  CHECK(cayley_colors(p6.g1) == all_but(64, drop));

  const auto p7 = thm12_pair(7);
  CHECK(p7.g0.order() == 128);
  CHECK(is_regular(p7.g0, 6));
  CHECK(is_regular(p7.g1, 6));
  CHECK(colors_disjoint(p7.g0, p7.g1));
  CHECK(cayley_colors(p7.g1) == cayley_colors(p6.g1));
  CHECK_THROWS_AS(thm12_pair(5), std::invalid_argument);
}

TEST_CASE("construction1 constraints") {
  const auto c16 = construction1_constraints(16);
  CHECK(c16.high_degree.size() == 6);
  CHECK(c16.h_petersen);
  CHECK(c16.palette0 == std::set<GroupElem>{1, 2, 4, 8, 15});
  CHECK(c16.palette1.size() == 9);
  const auto c19 = construction1_constraints(19);
  CHECK(c19.high_degree == std::set<GroupElem>{0, 2, 3, 5, 6, 12, 13, 16, 17});
  CHECK(c19.palette0 == pm(19, {1, 4, 7, 8}));
  CHECK(c19.palette1 == pm(19, {2, 3, 5, 6, 9}));
  CHECK_FALSE(c19.h_petersen);
  const auto c17 = construction1_constraints(17);
  CHECK(c17.high_degree.size() == 7);
  CHECK(c17.palette0 == pm(17, {1, 5, 8}));
  CHECK_THROWS_AS(construction1_constraints(18), std::invalid_argument);
}

TEST_CASE("record table") {
  const auto rows = record_table();
  REQUIRE(rows.size() == 29);
  const std::vector<std::pair<std::size_t, std::uint64_t>> expected = {
      {17, 436},  {18, 468},  {19, 500},  {20, 564},  {21, 666},  {22, 704},  {32, 1624}, {33, 1680},
      {34, 1800}, {35, 1860}, {36, 1920}, {37, 2048}, {38, 2448}, {39, 2520}, {40, 2592}, {41, 2664},
      {42, 2736}, {43, 3040}, {44, 3120}, {45, 3200}, {46, 3280}, {47, 3360}, {48, 3696}, {49, 4140},
      {50, 4232}, {51, 4324}, {52, 4416}, {55, 4800}, {70, 8192}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].k == expected[i].first);
    CHECK(rows[i].order == expected[i].second);
  }
  CHECK(rows[2].route.to_string() == "C q=16 quad=construction1 d=0");
  CHECK(rows[13].route.to_string() == "L q=37 pair=construction2 d=3");
  CHECK(rows[22].route.to_string() == "L q=43 pair=construction2 d=0");
  CHECK(rows[11].route.to_string() == "C q=32 pair=q32 d=0");
  CHECK(rows[27].route.to_string() == "L q=49 pair=q49 d=0");
  CHECK(rows[28].route.to_string() == "C q=64 pair=thm12 d=0");
}

TEST_CASE("closed-form table") {
  std::vector<std::string> forms;
  for (const auto& c : closed_form_table()) forms.push_back(c.to_string());
  CHECK(forms == std::vector<std::string>{"56(k-3)", "60(k-4)", "72(k-4)", "80(k-5)", "3696", "92(k-4)"});
  for (const auto& row : record_table()) {
    for (const auto& c : closed_form_table()) {
      if (row.route.q == c.q && row.route.kind == SemiplaneKind::L) CHECK(c.value(row.k) == row.order);
    }
  }
}

TEST_CASE("embedded data matches the catalog directory") {
  CHECK(embedded_data_intact());
  const std::filesystem::path dir = CAGE5_TEST_CATALOG_DIR;
  for (const auto& name : embedded_file_names()) {
    CAPTURE(name);
    CHECK(read_file(dir / name) == std::string(embedded_file(name)));
  }
  CHECK_THROWS_AS(embedded_file("nope.txt"), std::out_of_range);
  CHECK(relabel_table(31).size() == 30);
  CHECK(relabel_table(64).size() == 64);
  CHECK(relabel_table(41)[1] == 12);
  CHECK(relabel_table(32)[0b00111] == 0b01110);
  CHECK_THROWS_AS(relabel_table(37), std::invalid_argument);
}

TEST_CASE("named cages from the catalog families") {
  const auto cage56 = build_S(42, {1, -1, -7, 11, 15});
  CHECK(cage56.order() == 42);
  CHECK(is_regular(cage56, 5));
  CHECK(girth(cage56) == 6u);
  const auto g0 = construction2_pair(41).g0;
  CHECK(is_regular(g0, 6));
  CHECK(girth(g0) == 5u);
}

TEST_CASE("construction1 cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "cage5-cache-test";
  std::filesystem::remove_all(dir);
  CHECK_FALSE(load_construction1(17, dir).has_value());
  CHECK_THROWS_AS(construction1_quadruple(17, dir, kDefaultSearchBudget, false), MissingDataError);
  const auto quad = construction1_quadruple(17, dir);
  const auto loaded = load_construction1(17, dir);
  REQUIRE(loaded.has_value());
  CHECK(label_edges(loaded->g0) == label_edges(quad.g0));
  CHECK(label_edges(loaded->h1) == label_edges(quad.h1));
  const auto text = format_quadruple(17, quad);
  CHECK(format_quadruple(17, parse_quadruple(17, text)) == text);

  // A damaged cache is ignored and replaced.
  {
    std::ofstream out(dir / "construction1-q17.cache");
    out << "graph G0\nvertices 0 1\nedges 0-1\n";
  }
  CHECK_FALSE(load_construction1(17, dir).has_value());
  CHECK(label_edges(construction1_quadruple(17, dir).g0) == label_edges(quad.g0));
  CHECK_THROWS_AS(parse_quadruple(17, "bogus line"), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

TEST_CASE("shipped construction1 caches are valid") {
  const std::filesystem::path dir = CAGE5_TEST_CATALOG_DIR;
  for (std::uint32_t q : {16u, 17u, 19u}) {
    CAPTURE(q);
    CHECK(load_construction1(q, dir).has_value());
  }
}

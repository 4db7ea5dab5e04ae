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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cage5/amalgam.hpp"
#include "cage5/catalog.hpp"
#include "cage5/records.hpp"
#include "cage5/route.hpp"
#include "cage5/search.hpp"
#include "cage5/semicirculant.hpp"
#include "cage5/semiplane.hpp"

using namespace cage5;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      notes.push_back(std::move(what));
    }
  }
};

BuildOptions catalog_options() {
  BuildOptions o;
  o.catalog_dir = CAGE5_ACCEPTANCE_CATALOG_DIR;
  return o;
}

void check_records(Outcome& o, std::size_t lo, std::size_t hi,
                   const std::vector<std::pair<std::size_t, std::uint64_t>>& expected) {
  const auto rows = run_records(lo, hi, catalog_options());
  o.require(rows.size() == expected.size(), fmt::format("{} rows, expected {}", rows.size(), expected.size()));
  for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
    const auto& r = rows[i];
    const auto [k, n] = expected[i];
    o.require(r.entry.k == k && r.built_order == n && r.regularity == k && r.girth == 5u,
              fmt::format("k={}: order {} regularity {} girth {} {}", r.entry.k, r.built_order, r.regularity,
                          r.girth ? std::to_string(*r.girth) : "inf", r.error));
  }
}

Outcome criterion1() {
  Outcome o;
  check_records(o, 17, 22, {{17, 436}, {18, 468}, {19, 500}, {20, 564}, {21, 666}, {22, 704}});
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::vector<std::uint64_t> orders{1624, 1680, 1800, 1860, 1920, 2048, 2448, 2520, 2592, 2664, 2736,
                                          3040, 3120, 3200, 3280, 3360, 3696, 4140, 4232, 4324, 4416};
  std::vector<std::pair<std::size_t, std::uint64_t>> expected;
  for (std::size_t i = 0; i < orders.size(); ++i) expected.emplace_back(32 + i, orders[i]);
  check_records(o, 32, 52, expected);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto b55 = build_route(RouteDescriptor::parse("L q=49 pair=q49 d=0"), catalog_options());
  o.require(b55.k == 55 && b55.n == 4800 && b55.n == 2 * (49 - 1) * (55 - 5) && b55.girth == 5u,
            fmt::format("k=55 built k={} n={}", b55.k, b55.n));
  const auto b70 = build_route(RouteDescriptor::parse("C q=64 pair=thm12 d=0"), catalog_options());
  o.require(b70.k == 70 && b70.n == 8192 && b70.girth == 5u, fmt::format("k=70 built k={} n={}", b70.k, b70.n));

  // Every admissible k reached by deletion from the q = 53 and q = 64 amalgams.
  const auto base53 = build_base(RouteDescriptor::parse("L q=53 pair=thm11 d=0"));
  for (std::size_t k = 6; k <= 59; ++k) {
    const Amalgam a = delete_block_pairs(base53, 59 - k);
    o.require(a.regularity() == k && is_regular(a.graph, k) && a.graph.order() == bound_thm11(53, k) &&
                  girth(a.graph) == 5u,
              fmt::format("q=53 k={}: order {}", k, a.graph.order()));
  }
  const auto base64 = build_base(RouteDescriptor::parse("C q=64 pair=thm12 d=0"));
  for (std::size_t k = 7; k <= 70; ++k) {
    const Amalgam a = delete_block_pairs(base64, 70 - k);
    o.require(a.regularity() == k && is_regular(a.graph, k) && a.graph.order() == bound_thm12(64, k) &&
                  girth(a.graph) == 5u,
              fmt::format("q=64 k={}: order {}", k, a.graph.order()));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::uint32_t q : {16u, 17u, 19u}) {
    const auto res = search_quadruple(q);
    if (!res.quadruple) {
      o.require(false, fmt::format("q={} {} at {}", q, to_string(res.status), res.failed_stage));
      continue;
    }
    const auto& x = *res.quadruple;
    const auto rep = check_biregular_quadruple(x.h0, x.h1, x.g0, x.g1, make_field_of_order(q));
    o.require(rep.ok && rep.r == 3, fmt::format("q={}: {}", q, rep.diagnostic));
    o.notes.push_back(fmt::format("q={} nodes={}", q, res.nodes));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int specs = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int t = pick(5, 30);
    const int n = 2 * t;
    std::vector<int> odds;
    const int w = pick(1, 4);
    for (int guard = 0; static_cast<int>(odds.size()) < w && guard < 100; ++guard) {
      const int k = 2 * pick(0, t - 1) + 1;
      if (std::find(odds.begin(), odds.end(), k) == odds.end()) odds.push_back(k);
    }
    SemicirculantSpec s6;
    s6.order = n;
    s6.odds = odds;
    const auto g6 = girth(build_S(n, odds));
    o.require(girth6_condition(s6) == (!g6 || *g6 >= 6), "girth-6 mismatch on " + s6.to_string());

    const int evens = (t - 1) / 2;
    const int p = 2 * pick(1, evens);
    int q = p;
    while (q == p) q = 2 * pick(1, evens);
    SemicirculantSpec s5 = s6;
    s5.evens = EvenOffsets{p, q};
    const auto g5 = girth(build_SPQ(s5));
    o.require(girth5_conditions(s5).holds() == (!g5 || *g5 >= 5), "girth-5 mismatch on " + s5.to_string());
    specs += 2;
  }
  o.notes.push_back(fmt::format("{} specs", specs));
  return o;
}

Outcome criterion6() {
  Outcome o;
  SemicirculantSpec s;
  s.evens = EvenOffsets{2, 4};
  s.odds = {3, -7};
  for (int n = 22; n <= 60; n += 2) {
    SemicirculantSpec f = s;
    f.order = n;
    const auto g = girth(build_SPQ(f));
    o.require(!g || *g >= 5, fmt::format("order {} has girth {}", n, g ? *g : 0));
  }
  o.require(span(s) == 10, fmt::format("span {} != 10", span(s)));
  const auto a = SemicirculantSpec::parse("S:2t=inf;P=8;Q=16;K=1,-1,5,-13");
  const auto b = SemicirculantSpec::parse("S:2t=inf;P=2;Q=4;K=3,-7,15,-21");
  o.require(span(a) == 32, fmt::format("span of {} is {}, expected 32", a.to_string(), span(a)));
  o.require(span(b) == 37, fmt::format("span of {} is {}, expected 37", b.to_string(), span(b)));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto c = build_Cq(make_field_of_order(q));
    const auto rep = verify_block_structure(c);
    o.require(is_regular(c.graph, q) && c.graph.order() == 2ull * q * q, fmt::format("C_{} shape", q));
    if (q >= 3) o.require(girth(c.graph) == 6u, fmt::format("C_{} girth", q));
    o.require(rep.all_pairs_matchings(), fmt::format("C_{} block pairs", q));
  }
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 9u}) {
    const auto l = build_Lq(make_field_of_order(q));
    const auto rep = verify_block_structure(l);
    const auto g = girth(l.graph);
    o.require(is_regular(l.graph, q) && l.graph.order() == 2ull * (q * q - 1), fmt::format("L_{} shape", q));
    o.require(g && *g >= 6, fmt::format("L_{} girth", q));
    for (std::size_t i = 0; i < l.point_blocks.size(); ++i) {
      o.require(rep.empty_partners(i) == 1, fmt::format("L_{} point block {} empty partners", q, i));
    }
    o.require(rep.all_matchings_translations() && !rep.any_structural_failure(), fmt::format("L_{} translations", q));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto check = [&o](const char* name, const LabeledGraph& g, std::size_t n, std::size_t k, std::size_t gg) {
    o.require(g.order() == n && is_regular(g, k) && girth(g) == gg, std::string(name) + " parameters");
  };
  check("S14(1,-1,5)", build_S(14, {1, -1, 5}), 14, 3, 6);
  check("S30(6,12;1,-1,9)", build_SPQ(SemicirculantSpec::parse("S:2t=30;P=6;Q=12;K=1,-1,9")), 30, 5, 5);
  check("S40(8,16;1,-1,5,-13)", build_SPQ(SemicirculantSpec::parse("S:2t=40;P=8;Q=16;K=1,-1,5,-13")), 40, 6, 5);
  check("S42(1,-1,-7,11,15)", build_S(42, {1, -1, -7, 11, 15}), 42, 5, 6);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto b = build_route(RouteDescriptor::parse("L q=29 pair=construction2 d=0"), catalog_options());
  const auto d = diameter(b.amalgam.graph);
  o.require(d == 4, fmt::format("diameter {}", d));
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.require(moore_bound(3, 5) == 10, "n0(3,5)");
  o.require(moore_bound(7, 5) == 50, "n0(7,5)");
  for (std::uint64_t k = 2; k <= 100; ++k) o.require(moore_bound(k, 5) == 1 + k * k, fmt::format("n0({},5)", k));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"record rows k=17..22", criterion1},
      {"record rows k=32..52", criterion2},
      {"k=55, k=70 and the q=53/64 deletion families", criterion3},
      {"construction1 search q=16,17,19", criterion4},
      {"girth-condition predicates vs computed girth", criterion5},
      {"span lemma", criterion6},
      {"semiplane structure", criterion7},
      {"named semicirculant graphs", criterion8},
      {"L_29 amalgam diameter", criterion9},
      {"Moore bound", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail;
    for (std::size_t j = 0; j < o.notes.size() && j < 5; ++j) detail += (j ? "; " : "") + o.notes[j];
    if (o.notes.size() > 5) detail += fmt::format("; +{} more", o.notes.size() - 5);
    std::printf("criterion %zu %s: %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

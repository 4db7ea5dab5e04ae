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

#include <json.hpp>
#include <stdexcept>

#include "cage5/route.hpp"
#include "support/oracles.hpp"

using namespace cage5;

namespace {

BuildOptions shipped() {
  BuildOptions o;
  o.catalog_dir = CAGE5_TEST_CATALOG_DIR;
  o.allow_search = false;
  return o;
}

}  // namespace

TEST_CASE("route descriptors round trip") {
  for (const char* text : {"C q=16 quad=construction1 d=2", "L q=29 pair=construction2 d=1",
                           "C q=32 pair=q32 d=0", "L q=49 pair=q49 d=0", "L q=53 pair=thm11 d=3",
                           "C q=64 pair=thm12 d=2"}) {
    CAPTURE(text);
    const auto r = RouteDescriptor::parse(text);
    CHECK(r.to_string() == text);
    CHECK(RouteDescriptor::parse(std::string("route: ") + text) == r);
    CHECK(RouteDescriptor::parse(std::string("route:") + text) == r);
  }
  const auto r = RouteDescriptor::parse("L q=41 pair=construction2");
  CHECK(r.d == 0);
  CHECK(r.kind == SemiplaneKind::L);
  CHECK(r.source == PairSource::construction2);
}

TEST_CASE("malformed routes are rejected") {
  for (const char* text : {"", "X q=16 quad=construction1", "C q=16", "C q=16 pair=construction1",
                           "L q=16 quad=construction1", "C q=18 quad=construction1", "L q=30 pair=construction2",
                           "C q=29 pair=construction2", "L q=64 pair=thm12", "C q=32 pair=q32 d=-1",
                           "C q=32 pair=q32 d=x", "L q=abc pair=q49", "C q=128 pair=thm11",
                           "C q=32 pair=q32 d=1 extra=1"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(RouteDescriptor::parse(text), std::invalid_argument);
  }
}

TEST_CASE("route orders") {
  CHECK(route_order(RouteDescriptor::parse("L q=29 pair=construction2 d=1"), 4, 0) == 1624);
  CHECK(route_order(RouteDescriptor::parse("L q=43 pair=construction2"), 5, 0) == 3696);
  CHECK(route_order(RouteDescriptor::parse("C q=32 pair=q32"), 5, 32) == 2048);
  CHECK(route_order(RouteDescriptor::parse("C q=16 quad=construction1 d=2"), 3, 10) == 436);
  CHECK(nominal_pair_degree(RouteDescriptor::parse("L q=29 pair=construction2")) == 4);
  CHECK(nominal_pair_degree(RouteDescriptor::parse("L q=41 pair=construction2")) == 6);
  CHECK(nominal_pair_degree(RouteDescriptor::parse("C q=17 quad=construction1")) == 3);
}

TEST_CASE("building routes") {
  const auto b = build_route(RouteDescriptor::parse("C q=16 quad=construction1 d=2"), shipped());
  CHECK(b.k == 17);
  CHECK(b.n == 436);
  CHECK(b.girth == 5u);
  CHECK(is_regular(b.amalgam.graph, 17));
  CHECK(oracle::girth_by_edge_deletion(b.amalgam.graph) == 5u);

  const auto l = build_route(RouteDescriptor::parse("L q=29 pair=construction2 d=1"), shipped());
  CHECK(l.k == 32);
  CHECK(l.n == 1624);
  CHECK(l.girth == 5u);

  const auto j = nlohmann::json::parse(certificate_json(l));
  CHECK(j["k"] == 32);
  CHECK(j["n"] == 1624);
  CHECK(j["girth"] == 5);
  CHECK(j["route"] == "L q=29 pair=construction2 d=1");
  CHECK(certificate_json(l).find("\"k\"") < certificate_json(l).find("\"route\""));

  CHECK_THROWS_AS(build_route(RouteDescriptor::parse("L q=29 pair=construction2 d=31"), shipped()),
                  std::invalid_argument);
}

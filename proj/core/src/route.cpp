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


#include "cage5/route.hpp"

#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "cage5/catalog.hpp"
#include "cage5/field.hpp"

namespace cage5 {
namespace {

struct SourceInfo {
  PairSource source;
  const char* name;
  SemiplaneKind kind;
};

constexpr SourceInfo kSources[] = {
    {PairSource::construction1, "construction1", SemiplaneKind::C},
    {PairSource::construction2, "construction2", SemiplaneKind::L},
    {PairSource::q32, "q32", SemiplaneKind::C},
    {PairSource::q49, "q49", SemiplaneKind::L},
    {PairSource::thm11, "thm11", SemiplaneKind::L},
    {PairSource::thm12, "thm12", SemiplaneKind::C},
};

const SourceInfo& info(PairSource s) {
  for (const auto& i : kSources) {
    if (i.source == s) return i;
  }
  throw std::logic_error("unknown pair source");
}

std::uint64_t parse_number(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(fmt::format("route: {} must be a non-negative integer, got '{}'", key, v));
  }
  return std::stoull(v);
}

bool q_supported(PairSource s, std::uint32_t q) {
  switch (s) {
    case PairSource::construction1: return q == 16 || q == 17 || q == 19;
    case PairSource::construction2:
      return q == 29 || q == 31 || q == 37 || q == 41 || q == 43 || q == 47;
    case PairSource::q32: return q == 32;
    case PairSource::q49: return q == 49;
    case PairSource::thm11: {
      const auto [p, m] = prime_power_decomposition(q);
      return p > 2 && q >= 53;
    }
    case PairSource::thm12: {
      const auto [p, m] = prime_power_decomposition(q);
      return p == 2 && m >= 6;
    }
  }
  return false;
}

}  // namespace

std::string to_string(PairSource s) { return info(s).name; }

std::string RouteDescriptor::to_string() const {
  return fmt::format("{} q={} {}={} d={}", cage5::to_string(kind), q,
                     source == PairSource::construction1 ? "quad" : "pair", info(source).name, d);
}

RouteDescriptor RouteDescriptor::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("route: empty descriptor");
  if (tok == "route:") {
    if (!(in >> tok)) throw std::invalid_argument("route: empty descriptor");
  } else if (tok.starts_with("route:")) {
    tok.erase(0, 6);
  }
  RouteDescriptor r;
  if (tok == "C") {
    r.kind = SemiplaneKind::C;
  } else if (tok == "L") {
    r.kind = SemiplaneKind::L;
  } else {
    throw std::invalid_argument(fmt::format("route: semiplane must be C or L, got '{}'", tok));
  }
  bool have_q = false;
  bool have_source = false;
  std::string source_key;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(fmt::format("route: bad token '{}'", tok));
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "q") {
      const auto q = parse_number(key, val);
      if (q > 1024) throw std::invalid_argument("route: q too large");
      r.q = static_cast<std::uint32_t>(q);
      have_q = true;
    } else if (key == "d") {
      r.d = parse_number(key, val);
    } else if (key == "pair" || key == "quad") {
      bool known = false;
      for (const auto& i : kSources) {
        if (val == i.name) {
          r.source = i.source;
          known = true;
        }
      }
      if (!known) throw std::invalid_argument(fmt::format("route: unknown {} '{}'", key, val));
      source_key = key;
      have_source = true;
    } else {
      throw std::invalid_argument(fmt::format("route: unknown key '{}'", key));
    }
  }
  if (!have_q || !have_source) throw std::invalid_argument("route: q and pair/quad are required");
  if ((source_key == "quad") != (r.source == PairSource::construction1)) {
    throw std::invalid_argument("route: quad= is used for construction1 only, pair= otherwise");
  }
  if (info(r.source).kind != r.kind) {
    throw std::invalid_argument(fmt::format("route: {} lives in {}_q", info(r.source).name,
                                            cage5::to_string(info(r.source).kind)));
  }
  if (!q_supported(r.source, r.q)) {
    throw std::invalid_argument(fmt::format("route: q={} is not available for {}", r.q, info(r.source).name));
  }
  return r;
}

std::size_t nominal_pair_degree(const RouteDescriptor& route) {
  switch (route.source) {
    case PairSource::construction1: return 3;
    case PairSource::construction2: return route.q == 29 ? 4 : route.q == 41 ? 6 : 5;
    case PairSource::q32: return 5;
    case PairSource::q49:
    case PairSource::thm11:
    case PairSource::thm12: return 6;
  }
  return 0;
}

std::uint64_t route_order(const RouteDescriptor& route, std::size_t r, std::size_t h0_order) {
  (void)r;
  const std::uint64_t q = route.q;
  if (route.kind == SemiplaneKind::L) return 2 * (q * q - 1) - 2 * route.d * (q - 1);
  return biregular_amalgam_order(q, h0_order) - 2 * route.d * q;
}

Amalgam build_base(const RouteDescriptor& route, const BuildOptions& opts) {
  const FieldSpec field = make_field_of_order(route.q);
  const auto dir = opts.catalog_dir.empty() ? default_catalog_dir() : opts.catalog_dir;
  switch (route.source) {
    case PairSource::construction1: {
      const Quadruple quad = construction1_quadruple(route.q, dir, opts.budget, opts.allow_search);
      return amalgamate_C(build_Cq(field), quad.h0, quad.h1, quad.g0, quad.g1);
    }
    case PairSource::construction2: {
      const auto pair = construction2_pair(route.q);
      return amalgamate_L(build_Lq(field), pair.g0, pair.g1);
    }
    case PairSource::q32: {
      const auto pair = q32_pair();
      return amalgamate_C(build_Cq(field), pair.g0, pair.g1);
    }
    case PairSource::q49: {
      const auto pair = q49_pair();
      return amalgamate_L(build_Lq(field), pair.g0, pair.g1);
    }
    case PairSource::thm11: {
      const auto pair = thm11_pair(route.q);
      return amalgamate_L(build_Lq(field), pair.g0, pair.g1);
    }
    case PairSource::thm12: {
      const auto pair = thm12_pair(field.m());
      return amalgamate_C(build_Cq(field), pair.g0, pair.g1);
    }
  }
  throw std::logic_error("unknown pair source");
}

BuiltRoute build_route(const RouteDescriptor& route, const BuildOptions& opts) {
  Amalgam base = build_base(route, opts);
  const std::size_t h0_order = base.point_blocks.empty()
                                   ? 0
                                   : static_cast<std::size_t>(std::count_if(
                                         base.point_blocks[0].begin(), base.point_blocks[0].end(),
                                         [](VertexId v) { return v != ~VertexId{0}; }));
  BuiltRoute out;
  out.route = route;
  out.amalgam = route.d == 0 ? std::move(base) : delete_block_pairs(base, route.d);
  out.k = out.amalgam.regularity();
  out.n = out.amalgam.graph.order();
  out.girth = girth(out.amalgam.graph);
  if (!is_regular(out.amalgam.graph, out.k)) {
    throw VerificationError(fmt::format("{}: graph is not {}-regular", route.to_string(), out.k));
  }
  if (out.girth && *out.girth < 5) {
    throw VerificationError(fmt::format("{}: girth {} is below five", route.to_string(), *out.girth));
  }
  const auto expected = route_order(route, out.amalgam.r, h0_order);
  if (out.n != expected) {
    throw VerificationError(
        fmt::format("{}: order {} differs from the closed form {}", route.to_string(), out.n, expected));
  }
  return out;
}

std::string certificate_json(const BuiltRoute& b) {
  nlohmann::ordered_json j;
  j["k"] = b.k;
  j["n"] = b.n;
  if (b.girth) {
    j["girth"] = *b.girth;
  } else {
    j["girth"] = nullptr;
  }
  j["route"] = b.route.to_string();
  return j.dump();
}

}  // namespace cage5

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
#include <string>
#include <string_view>

#include "cage5/amalgam.hpp"
#include "cage5/search.hpp"
#include "cage5/semiplane.hpp"

namespace cage5 {

/// Where the pair or quadruple installed in an amalgam comes from.
enum class PairSource { construction1, construction2, q32, q49, thm11, thm12 };

std::string to_string(PairSource s);

/// Text form "C q=16 quad=construction1 d=2" or "L q=29 pair=construction2 d=1".
/// An optional leading "route:" is accepted, and d defaults to 0.
struct RouteDescriptor {
  SemiplaneKind kind = SemiplaneKind::C;
  std::uint32_t q = 0;
  PairSource source = PairSource::construction1;
  std::size_t d = 0;

  std::string to_string() const;
  /// Throws std::invalid_argument on malformed text or an inconsistent
  /// kind/source/q combination.
  static RouteDescriptor parse(std::string_view text);

  friend bool operator==(const RouteDescriptor&, const RouteDescriptor&) = default;
};

struct BuildOptions {
  std::filesystem::path catalog_dir;  // empty: the installed default
  std::uint64_t budget = kDefaultSearchBudget;
  bool allow_search = true;  // search and cache construction1 on a miss
};

struct BuiltRoute {
  RouteDescriptor route;
  Amalgam amalgam;
  std::size_t k = 0;
  std::size_t n = 0;
  std::optional<std::size_t> girth;
};

/// The amalgam for the route with no deletions applied (d is ignored).
Amalgam build_base(const RouteDescriptor& route, const BuildOptions& opts = {});

/// Builds, deletes d block pairs and computes the exact girth. Throws
/// VerificationError if any check fails.
BuiltRoute build_route(const RouteDescriptor& route, const BuildOptions& opts = {});

/// {"k":..,"n":..,"girth":..,"route":".."} on one line.
std::string certificate_json(const BuiltRoute& b);

/// Regularity r of the pair (or of H0, H1) that the route installs.
std::size_t nominal_pair_degree(const RouteDescriptor& route);

/// Closed-form order of the route: 2(q-1)(k-r+1) for L, 2q^2 - 2(q - |V(H0)|)
/// - 2qd for C. Needs the pair regularity r and, for C, |V(H0)|.
std::uint64_t route_order(const RouteDescriptor& route, std::size_t r, std::size_t h0_order);

}  // namespace cage5

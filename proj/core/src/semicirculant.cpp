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

#include "cage5/semicirculant.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace cage5 {

namespace {

// Reduction into Z_n, or the identity when n is 0 (the infinite case).
long long reduce(long long x, long long n) {
  if (n == 0) return x;
  x %= n;
  return x < 0 ? x + n : x;
}

long long modulus_of(const SemicirculantSpec& spec) { return spec.order ? *spec.order : 0; }

std::vector<long long> omega_differences(const EvenOffsets& e, long long n) {
  const long long omega[] = {0, e.p, -e.p, e.q, -e.q};
  std::vector<long long> out;
  for (long long a : omega) {
    for (long long b : omega) out.push_back(reduce(a - b, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long long> ordered_odd_differences(const std::vector<int>& odds, long long n) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < odds.size(); ++i) {
    for (std::size_t j = 0; j < odds.size(); ++j) {
      if (i != j) out.push_back(reduce(static_cast<long long>(odds[i]) - odds[j], n));
    }
  }
  return out;
}

void check_order(int order) {
  if (order % 2 != 0) throw std::invalid_argument("semicirculant order must be even");
  if (order < 10) throw std::invalid_argument("semicirculant order must be >= 10 (t >= 5)");
}

void check_odds(const std::vector<int>& odds, long long n) {
  std::set<long long> seen;
  for (int k : odds) {
    if (k % 2 == 0) throw std::invalid_argument("odd offset list contains an even value");
    if (!seen.insert(reduce(k, n)).second) throw std::invalid_argument("duplicate odd offset");
  }
}

void check_evens(const EvenOffsets& e, int order) {
  const int t = order / 2;
  if (e.p % 2 != 0 || e.q % 2 != 0) throw std::invalid_argument("P and Q must be even");
  if (e.p == e.q) throw std::invalid_argument("P and Q must differ");
  if (e.p <= 0 || e.q <= 0 || e.p >= t || e.q >= t) {
    throw std::invalid_argument("P and Q must satisfy 0 < P, Q < t");
  }
}

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(fmt::format("semicirculant spec: bad integer '{}'", s));
  }
  return v;
}

}  // namespace

std::string SemicirculantSpec::to_string() const {
  std::string out = "S:2t=";
  out += order ? std::to_string(*order) : "inf";
  if (evens) out += fmt::format(";P={};Q={}", evens->p, evens->q);
  out += fmt::format(";K={}", fmt::join(odds, ","));
  return out;
}

SemicirculantSpec SemicirculantSpec::parse(std::string_view text) {
  if (!text.starts_with("S:")) throw std::invalid_argument("semicirculant spec must start with 'S:'");
  text.remove_prefix(2);
  SemicirculantSpec spec;
  std::optional<int> p;
  std::optional<int> q;
  bool have_order = false;
  bool have_k = false;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view field = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("semicirculant spec: missing '='");
    const std::string_view key = field.substr(0, eq);
    const std::string_view value = field.substr(eq + 1);
    if (key == "2t") {
      have_order = true;
      if (value == "inf") {
        spec.order.reset();
      } else {
        spec.order = parse_int(value);
      }
    } else if (key == "P") {
      p = parse_int(value);
    } else if (key == "Q") {
      q = parse_int(value);
    } else if (key == "K") {
      have_k = true;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        spec.odds.push_back(parse_int(rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    } else {
      throw std::invalid_argument(fmt::format("semicirculant spec: unknown key '{}'", key));
    }
  }
  if (!have_order || !have_k) throw std::invalid_argument("semicirculant spec needs 2t and K");
  if (p.has_value() != q.has_value()) throw std::invalid_argument("P and Q must be given together");
  if (p) spec.evens = EvenOffsets{*p, *q};
  return spec;
}

SemicirculantSpec normalized(const SemicirculantSpec& spec) {
  if (spec.infinite()) return spec;
  SemicirculantSpec out = spec;
  const long long n = *spec.order;
  const long long t = n / 2;
  for (int& k : out.odds) {
    long long r = reduce(k, n);
    if (r > t) r -= n;
    k = static_cast<int>(r);
  }
  return out;
}

LabeledGraph build_S(int order, const std::vector<int>& odds) {
  check_order(order);
  check_odds(odds, order);
  std::vector<GroupElem> labels(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) labels[static_cast<std::size_t>(i)] = static_cast<GroupElem>(i);
  GraphBuilder b(labels.size());
  for (int v = 0; v < order; v += 2) {
    for (int k : odds) b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(reduce(v + k, order)));
  }
  b.set_labels(GroupSpec::cyclic(static_cast<std::uint32_t>(order)), std::move(labels));
  return std::move(b).build();
}

LabeledGraph build_SPQ(const SemicirculantSpec& spec) {
  if (spec.infinite()) throw std::invalid_argument("cannot build the infinite semicirculant");
  const int order = *spec.order;
  check_order(order);
  check_odds(spec.odds, order);
  if (!spec.evens) throw std::invalid_argument("build_SPQ needs even offsets P and Q");
  check_evens(*spec.evens, order);
  std::vector<GroupElem> labels(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) labels[static_cast<std::size_t>(i)] = static_cast<GroupElem>(i);
  GraphBuilder b(labels.size());
  for (int v = 0; v < order; v += 2) {
    for (int k : spec.odds) {
      b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(reduce(v + k, order)));
    }
    b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(reduce(v + spec.evens->p, order)));
    b.add_edge(static_cast<VertexId>(v + 1),
               static_cast<VertexId>(reduce(v + 1 + spec.evens->q, order)));
  }
  b.set_labels(GroupSpec::cyclic(static_cast<std::uint32_t>(order)), std::move(labels));
  return std::move(b).build();
}

bool girth6_condition(const SemicirculantSpec& spec) {
  auto diffs = ordered_odd_differences(spec.odds, modulus_of(spec));
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

std::string GirthFiveConditions::first_failure() const {
  if (!multiples_nonzero) return "i";
  if (!odd_differences) return "ii";
  if (!mixed_differences) return "iii";
  return "";
}

GirthFiveConditions girth5_conditions(const SemicirculantSpec& spec) {
  if (!spec.evens) throw std::invalid_argument("girth-five conditions need P and Q");
  const long long n = modulus_of(spec);
  const EvenOffsets& e = *spec.evens;
  GirthFiveConditions out;
  for (long long x : {3LL * e.p, 4LL * e.p, 3LL * e.q, 4LL * e.q}) {
    if (reduce(x, n) == 0) out.multiples_nonzero = false;
  }
  out.odd_differences = girth6_condition(spec);
  const auto omega = omega_differences(e, n);
  for (long long d : ordered_odd_differences(spec.odds, n)) {
    if (std::binary_search(omega.begin(), omega.end(), d)) out.mixed_differences = false;
  }
  return out;
}

int span(const SemicirculantSpec& spec) {
  if (!spec.infinite()) throw std::invalid_argument("span is defined for the infinite semicirculant");
  long long d = 0;
  for (int k : spec.odds) d = std::max(d, std::llabs(k));
  for (long long x : ordered_odd_differences(spec.odds, 0)) d = std::max(d, x);
  if (spec.evens) {
    for (long long x : omega_differences(*spec.evens, 0)) d = std::max(d, x);
  }
  return static_cast<int>(d);
}

int min_valid_order(const SemicirculantSpec& spec) {
  if (!spec.infinite()) throw std::invalid_argument("min_valid_order needs the infinite spec");
  if (!spec.evens) throw std::invalid_argument("min_valid_order needs P and Q");
  if (!girth5_conditions(spec).holds()) {
    throw std::invalid_argument("girth-five conditions fail over Z");
  }
  const int d = span(spec);
  const int first = 2 * (d + 1);
  // Differences of differences lie in [-2D, 2D] and 4P, 4Q <= 4D, so beyond
  // 4D + 2 no new residue coincidence can appear.
  for (int order = first; order <= 4 * d + 2; order += 2) {
    SemicirculantSpec finite = spec;
    finite.order = order;
    if (!girth5_conditions(finite).holds()) {
      throw std::logic_error(fmt::format("girth-five conditions fail at order {}", order));
    }
  }
  return first;
}

std::vector<std::uint8_t> phi(unsigned m, std::uint64_t n) {
  if (m >= 64 || n >= (std::uint64_t{1} << m)) throw std::out_of_range("phi: value out of range");
  std::vector<std::uint8_t> bits(m);
  for (unsigned i = 0; i < m; ++i) bits[i] = static_cast<std::uint8_t>((n >> i) & 1);
  return bits;
}

std::uint64_t phi_inverse(const std::vector<std::uint8_t>& bits) {
  std::uint64_t n = 0;
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] > 1) throw std::invalid_argument("phi_inverse: entries must be 0 or 1");
    n = (n << 1) | bits[i];
  }
  return n;
}

std::string bit_string(unsigned m, std::uint64_t n) {
  const auto bits = phi(m, n);
  std::string out;
  for (std::size_t i = bits.size(); i-- > 0;) out.push_back(bits[i] ? '1' : '0');
  return out;
}

LabeledGraph build_barS(const SemicirculantSpec& spec) {
  if (spec.infinite()) throw std::invalid_argument("cannot build the infinite semicirculant");
  const int order = *spec.order;
  unsigned m = 0;
  while ((1 << m) < order) ++m;
  if ((1 << m) != order) throw std::invalid_argument("bar-S needs order 2^m");
  LabeledGraph g = spec.evens ? build_SPQ(spec) : build_S(order, spec.odds);
  return with_group(g, GroupSpec::elementary(2, m));
}

LabeledGraph lift_graph(const LabeledGraph& g, unsigned m) {
  const auto& grp = g.group();
  if (!grp || grp->prime() != 2 || !g.labels_cover_group()) {
    throw std::invalid_argument("lift_graph needs a graph labelled on all of (Z_2)^d");
  }
  const unsigned d = grp->dimension();
  if (m <= d || m > 24) throw std::invalid_argument("lift_graph needs d < m <= 24");
  const std::uint32_t copies = 1u << (m - d);
  const std::uint32_t n = 1u << m;
  std::vector<GroupElem> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;
  GraphBuilder b(n);
  const auto edges = label_edges(g);
  for (std::uint32_t high = 0; high < copies; ++high) {
    const std::uint32_t base = high << d;
    for (const auto& [x, y] : edges) b.add_edge(base | x, base | y);
  }
  b.set_labels(GroupSpec::elementary(2, m), std::move(labels));
  return std::move(b).build();
}

}  // namespace cage5

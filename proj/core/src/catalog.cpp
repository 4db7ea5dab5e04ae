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


#include "cage5/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "cage5/amalgam.hpp"
#include "cage5/errors.hpp"
#include "cage5/field.hpp"
#include "cage5/semicirculant.hpp"
#include "catalog_data.hpp"

#ifndef CAGE5_DEFAULT_CATALOG_DIR
#define CAGE5_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace cage5 {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const data::EmbeddedText& embedded(std::string_view name) {
  for (const auto& t : data::embedded_texts()) {
    if (name == t.name) {
      if (fnv1a(t.text) != t.checksum) {
        throw std::logic_error(fmt::format("embedded table {} fails its checksum", name));
      }
      return t;
    }
  }
  throw std::out_of_range(fmt::format("no embedded catalog file '{}'", name));
}

// Non-comment, non-blank lines split on whitespace.
std::vector<std::vector<std::string>> rows_of(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> row;
    for (std::string w; ls >> w;) row.push_back(w);
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

GroupElem parse_label(const std::string& s, bool binary) {
  GroupElem v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, binary ? 2 : 10);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument(fmt::format("bad label '{}'", s));
  }
  return v;
}

std::set<GroupElem> plus_minus(const GroupSpec& g, std::initializer_list<int> xs) {
  std::set<GroupElem> out;
  const auto n = static_cast<long>(g.order());
  for (int x : xs) {
    const auto a = static_cast<GroupElem>(((x % n) + n) % n);
    out.insert(a);
    out.insert(g.neg(a));
  }
  return out;
}

LabeledGraph spq(int order, int p, int q, std::vector<int> odds) {
  SemicirculantSpec s;
  s.order = order;
  s.evens = EvenOffsets{p, q};
  s.odds = std::move(odds);
  return build_SPQ(s);
}

void require(bool ok, std::string_view what) {
  if (!ok) throw VerificationError(fmt::format("catalog validation failed: {}", what));
}

void require_suitable(const GraphPair& pair, const GroupSpec& group, std::size_t r,
                      std::string_view name) {
  const auto rep = check_suitable_pair(pair.g0, pair.g1, group);
  require(rep.ok, fmt::format("{} pair: {}", name, rep.diagnostic));
  require(rep.r == r, fmt::format("{} pair is {}-regular, expected {}", name, rep.r, r));
}

std::set<GroupElem> complement_colors(const GroupSpec& g, const std::set<GroupElem>& w,
                                      std::initializer_list<GroupElem> extra) {
  std::set<GroupElem> out;
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (!w.contains(a) && std::find(extra.begin(), extra.end(), a) == extra.end()) out.insert(a);
  }
  return out;
}

bool subset(const std::set<GroupElem>& a, const std::set<GroupElem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<GroupElem> high_labels(const LabeledGraph& g, std::size_t r) {
  std::set<GroupElem> out;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == r + 1) out.insert(g.label(v));
  }
  return out;
}

bool meets_constraints(const Quadruple& quad, const Construction1Constraints& c) {
  if (high_labels(quad.g0, c.r) != c.high_degree || high_labels(quad.g1, c.r) != c.high_degree) {
    return false;
  }
  if (!subset(cayley_colors(quad.g0), c.palette0) || !subset(cayley_colors(quad.g1), c.palette1)) {
    return false;
  }
  if (c.h_petersen && (quad.h0.order() != 10 || quad.h1.order() != 10)) return false;
  return true;
}

}  // namespace

GraphPair construction2_pair(std::uint32_t q) {
  const int n = static_cast<int>(q) - 1;
  const GroupSpec z = GroupSpec::cyclic(q - 1);
  GraphPair pair;
  std::size_t r = 5;
  switch (q) {
    case 29:
      pair = {spq(n, 4, 8, {1, -1}), spq(n, 2, 6, {3, -7})};
      r = 4;
      require(cayley_colors(pair.g0) == plus_minus(z, {1, 4, 8}), "q=29 G0 colours");
      require(cayley_colors(pair.g1) == plus_minus(z, {2, 3, 6, 7}), "q=29 G1 colours");
      break;
    case 31: {
      auto g0 = spq(n, 6, 12, {1, -1, 9});
      auto g1 = relabel(g0, relabel_table(31));
      pair = {std::move(g0), std::move(g1)};
      require(cayley_colors(pair.g1) ==
                  complement_colors(z, plus_minus(z, {1, 6, 9, 12}), {0}),
              "q=31 G1 colours");
      break;
    }
    case 37:
      pair = {spq(n, 8, 14, {1, -1, 11}), spq(n, 2, 4, {3, -7, 15})};
      break;
    case 41: {
      auto g0 = spq(n, 8, 16, {1, -1, 5, -13});
      auto g1 = relabel(g0, relabel_table(41));
      pair = {std::move(g0), std::move(g1)};
      r = 6;
      break;
    }
    case 43:
    case 47:
      pair = {spq(n, 6, 12, {1, -1, 9}), spq(n, 2, 4, {3, -7, 15})};
      break;
    default:
      throw std::invalid_argument(
          fmt::format("no construction2 pair for q={} (supported: 29, 31, 37, 41, 43, 47)", q));
  }
  require_suitable(pair, z, r, fmt::format("q={}", q));
  return pair;
}

GraphPair q32_pair() {
  const GroupSpec g = GroupSpec::elementary(2, 5);
  const auto rows = q32_adjacency();
  std::vector<GroupElem> labels(32);
  for (GroupElem a = 0; a < 32; ++a) labels[a] = a;
  std::set<LabelEdge> edges;
  std::set<LabelEdge> directed;
  for (const auto& row : rows) {
    for (std::size_t i = 1; i < row.size(); ++i) {
      directed.emplace(row[0], row[i]);
      edges.emplace(std::min(row[0], row[i]), std::max(row[0], row[i]));
    }
  }
  for (auto [a, b] : directed) require(directed.contains({b, a}), "q=32 adjacency list is symmetric");
  GraphPair pair;
  pair.g0 = graph_from_label_edges(g, labels, {edges.begin(), edges.end()});
  pair.g1 = relabel(pair.g0, relabel_table(32));

  require(is_regular(pair.g0, 5) && girth(pair.g0) == 5u, "q=32 G0 is a (5,5)-graph");
  const std::set<GroupElem> w0{0b00001, 0b01001, 0b10000, 0b11010, 0b11011,
                               0b11100, 0b11101, 0b11110, 0b11111};
  require(cayley_colors(pair.g0) == w0, "q=32 w(G0)");
  require(cayley_colors(pair.g1) == complement_colors(g, w0, {0, 0b00110}), "q=32 w(G1)");
  require_suitable(pair, g, 5, "q=32");
  return pair;
}

GraphPair q49_pair() {
  const GroupSpec z = GroupSpec::cyclic(48);
  const LabeledGraph base = build_S(48, {1, -1, 5, -13});
  std::set<LabelEdge> edges;
  for (const auto& e : label_edges(base)) edges.insert(e);
  auto add = [&edges](int a, int b) {
    const auto x = static_cast<GroupElem>(((a % 48) + 48) % 48);
    const auto y = static_cast<GroupElem>(((b % 48) + 48) % 48);
    edges.emplace(std::min(x, y), std::max(x, y));
  };
  for (int v = 0; v < 24; ++v) add(2 * v, 2 * v + 8);
  for (int i : {0, 2, 4, 6}) {
    const int cyc[] = {1 + i, 17 + i, 41 + i, 25 + i, 9 + i, 33 + i};
    for (int j = 0; j < 6; ++j) add(cyc[j], cyc[(j + 1) % 6]);
  }
  std::vector<GroupElem> labels(48);
  for (GroupElem a = 0; a < 48; ++a) labels[a] = a;
  GraphPair pair;
  pair.g0 = graph_from_label_edges(z, labels, {edges.begin(), edges.end()});
  pair.g1 = relabel(pair.g0, relabel_table(49));

  const auto w0 = plus_minus(z, {1, 5, 8, 13, 16, 24});
  require(is_regular(pair.g0, 6) && girth(pair.g0) == 5u, "q=49 G0 is a (6,5)-graph");
  require(cayley_colors(pair.g0) == w0, "q=49 w(G0)");
  require(cayley_colors(pair.g1) == complement_colors(z, w0, {0}), "q=49 w(G1)");
  require_suitable(pair, z, 6, "q=49");
  return pair;
}

int thm11_alpha(std::uint32_t q) {
  if (q == 59 || q == 73) return -23;
  if (q == 61) return -25;
  return -21;
}

GraphPair thm11_pair(std::uint32_t q) {
  const auto [p, m] = prime_power_decomposition(q);
  if (p == 0 || p == 2 || q < 53) {
    throw std::invalid_argument(fmt::format("thm11 pair needs an odd prime power q >= 53, got {}", q));
  }
  const int n = static_cast<int>(q) - 1;
  GraphPair pair{spq(n, 8, 16, {1, -1, 5, -13}), spq(n, 2, 4, {3, -7, 15, thm11_alpha(q)})};
  require_suitable(pair, GroupSpec::cyclic(q - 1), 6, fmt::format("thm11 q={}", q));
  return pair;
}

GraphPair thm12_pair(unsigned m) {
  if (m < 6) throw std::invalid_argument(fmt::format("thm12 pair needs m >= 6, got {}", m));
  SemicirculantSpec s;
  s.order = 64;
  s.evens = EvenOffsets{4, 8};
  s.odds = {1, 3, 41, 47};
  GraphPair pair;
  pair.g0 = build_barS(s);
  pair.g1 = relabel(pair.g0, relabel_table(64));
  const GroupSpec g6 = GroupSpec::elementary(2, 6);
  const std::set<GroupElem> w0{1, 3, 4, 7, 8, 12, 15, 19, 23, 24, 25,
                               28, 31, 41, 47, 51, 55, 56, 57, 60, 63};
  require(cayley_colors(pair.g0) == w0, "q=64 w(G0)");
  require(cayley_colors(pair.g1) == complement_colors(g6, w0, {0, 50}), "q=64 w(G1)");
  if (m > 6) {
    pair.g0 = lift_graph(pair.g0, m);
    pair.g1 = lift_graph(pair.g1, m);
  }
  require_suitable(pair, GroupSpec::elementary(2, m), 6, fmt::format("thm12 m={}", m));
  return pair;
}

Construction1Constraints construction1_constraints(std::uint32_t q) {
  Construction1Constraints c;
  c.q = q;
  c.r = 3;
  switch (q) {
    case 16:
      c.high_degree = {0, 12, 6, 9, 3, 15};
      c.palette0 = {0b0001, 0b0010, 0b0100, 0b1000, 0b1111};
      c.palette1 = {0b0011, 0b0110, 0b0111, 0b1001, 0b1010, 0b1011, 0b1100, 0b1101, 0b1110};
      c.h_petersen = true;
      break;
    case 17: {
      const auto z = GroupSpec::cyclic(17);
      c.high_degree = {0, 2, 5, 8, 10, 13, 15};
      c.palette0 = plus_minus(z, {1, 5, 8});
      c.palette1 = plus_minus(z, {2, 3, 4, 6, 7});
      break;
    }
    case 19: {
      const auto z = GroupSpec::cyclic(19);
      c.high_degree = {0, 2, 3, 5, 6, 12, 13, 16, 17};
      c.palette0 = plus_minus(z, {1, 4, 7, 8});
      c.palette1 = plus_minus(z, {2, 3, 5, 6, 9});
      break;
    }
    default:
      throw std::invalid_argument(
          fmt::format("no construction1 data for q={} (supported: 16, 17, 19)", q));
  }
  return c;
}

std::vector<GroupElem> relabel_table(std::uint32_t q) {
  if (q != 31 && q != 32 && q != 41 && q != 49 && q != 64) {
    throw std::invalid_argument(fmt::format("no relabelling table for q={}", q));
  }
  const bool binary = q == 32;
  const std::size_t n = (q == 32 || q == 64) ? q : q - 1;
  std::vector<GroupElem> perm(n, 0);
  std::vector<bool> seen_from(n, false);
  std::vector<bool> seen_to(n, false);
  const auto rows = rows_of(embedded(fmt::format("relabel-q{}.perm", q)).text);
  if (rows.size() != n) throw std::logic_error("relabelling table has the wrong length");
  for (const auto& row : rows) {
    if (row.size() != 2) throw std::logic_error("relabelling row must have two entries");
    const GroupElem a = parse_label(row[0], binary);
    const GroupElem b = parse_label(row[1], binary);
    if (a >= n || b >= n || seen_from[a] || seen_to[b]) {
      throw std::logic_error("relabelling table is not a permutation");
    }
    seen_from[a] = seen_to[b] = true;
    perm[a] = b;
  }
  return perm;
}

std::vector<std::vector<GroupElem>> q32_adjacency() {
  std::vector<std::vector<GroupElem>> out;
  for (const auto& row : rows_of(embedded("q32.adj").text)) {
    std::vector<GroupElem> r;
    for (const auto& w : row) r.push_back(parse_label(w, true));
    out.push_back(std::move(r));
  }
  if (out.size() != 32) throw std::logic_error("q=32 adjacency list must have 32 rows");
  return out;
}

bool embedded_data_intact() {
  for (const auto& t : data::embedded_texts()) {
    if (fnv1a(t.text) != t.checksum) return false;
  }
  return true;
}

std::string_view embedded_file(std::string_view name) { return embedded(name).text; }

std::vector<std::string> embedded_file_names() {
  std::vector<std::string> out;
  for (const auto& t : data::embedded_texts()) out.emplace_back(t.name);
  return out;
}

std::filesystem::path default_catalog_dir() {
  std::error_code ec;
  if (std::filesystem::is_directory(CAGE5_DEFAULT_CATALOG_DIR, ec)) return CAGE5_DEFAULT_CATALOG_DIR;
  return CAGE5_INSTALLED_CATALOG_DIR;
}

std::vector<RecordEntry> record_table() {
  std::vector<RecordEntry> out;
  std::istringstream in{std::string(embedded("records.csv").text)};
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    RecordEntry e;
    e.k = std::stoul(line.substr(0, c1));
    e.order = std::stoull(line.substr(c1 + 1, c2 - c1 - 1));
    e.route = RouteDescriptor::parse(line.substr(c2 + 1));
    const std::size_t r = nominal_pair_degree(e.route);
    const std::size_t h0 = e.route.source == PairSource::construction1
                               ? e.route.q - construction1_constraints(e.route.q).high_degree.size()
                               : e.route.q;
    if (e.route.q + r - e.route.d != e.k || route_order(e.route, r, h0) != e.order) {
      throw std::logic_error(fmt::format("record k={} disagrees with its route", e.k));
    }
    out.push_back(e);
  }
  return out;
}

std::uint64_t ClosedForm::value(std::size_t k) const {
  if (k < k_min || k > k_max) throw std::invalid_argument("k outside the closed form's range");
  return bound_eq2(q, r, k);
}

std::string ClosedForm::to_string() const {
  if (k_min == k_max) return std::to_string(value(k_min));
  return fmt::format("{}(k-{})", coefficient(), r - 1);
}

std::vector<ClosedForm> closed_form_table() {
  return {{29, 4, 32, 33}, {31, 5, 34, 36}, {37, 5, 38, 42},
          {41, 6, 43, 47}, {43, 5, 48, 48}, {47, 5, 49, 52}};
}

std::string format_quadruple(std::uint32_t q, const Quadruple& quad) {
  std::string out = fmt::format("# construction1 quadruple for q={}\n", q);
  const std::pair<const char*, const LabeledGraph*> parts[] = {
      {"G0", &quad.g0}, {"G1", &quad.g1}, {"H0", &quad.h0}, {"H1", &quad.h1}};
  for (const auto& [name, g] : parts) {
    out += fmt::format("graph {}\nvertices", name);
    std::vector<GroupElem> labels(g->labels().begin(), g->labels().end());
    std::sort(labels.begin(), labels.end());
    for (GroupElem a : labels) out += fmt::format(" {}", a);
    out += "\nedges";
    for (const auto& [a, b] : label_edges(*g)) out += fmt::format(" {}-{}", a, b);
    out += "\n";
  }
  return out;
}

Quadruple parse_quadruple(std::uint32_t q, std::string_view text) {
  const GroupSpec group = make_field_of_order(q).additive_group();
  std::map<std::string, LabeledGraph> graphs;
  std::string current;
  std::vector<GroupElem> labels;
  for (const auto& row : rows_of(text)) {
    if (row[0] == "graph" && row.size() == 2) {
      current = row[1];
    } else if (row[0] == "vertices" && !current.empty()) {
      labels.clear();
      for (std::size_t i = 1; i < row.size(); ++i) labels.push_back(parse_label(row[i], false));
    } else if (row[0] == "edges" && !current.empty()) {
      std::vector<LabelEdge> edges;
      for (std::size_t i = 1; i < row.size(); ++i) {
        const auto dash = row[i].find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge " + row[i]);
        edges.emplace_back(parse_label(row[i].substr(0, dash), false),
                           parse_label(row[i].substr(dash + 1), false));
      }
      graphs[current] = graph_from_label_edges(group, labels, edges);
      current.clear();
    } else {
      throw std::invalid_argument(fmt::format("unexpected line starting '{}'", row[0]));
    }
  }
  for (const char* name : {"G0", "G1", "H0", "H1"}) {
    if (!graphs.contains(name)) throw std::invalid_argument(fmt::format("graph {} missing", name));
  }
  return {graphs["H0"], graphs["H1"], graphs["G0"], graphs["G1"]};
}

std::optional<Quadruple> load_construction1(std::uint32_t q, const std::filesystem::path& dir) {
  const auto path = dir / fmt::format("construction1-q{}.cache", q);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    Quadruple quad = parse_quadruple(q, ss.str());
    const auto rep = check_biregular_quadruple(quad.h0, quad.h1, quad.g0, quad.g1,
                                               make_field_of_order(q));
    if (!rep.ok || !meets_constraints(quad, construction1_constraints(q))) return std::nullopt;
    return quad;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Quadruple construction1_quadruple(std::uint32_t q, const std::filesystem::path& dir,
                                  std::uint64_t budget, bool allow_search) {
  if (auto cached = load_construction1(q, dir)) return *cached;
  if (!allow_search) {
    throw MissingDataError(fmt::format("no valid construction1 cache for q={} in {}", q, dir.string()));
  }
  auto res = search_quadruple(q, budget);
  if (!res.quadruple) {
    throw SearchFailed(res.status, fmt::format("construction1 search for q={} {} at stage {}", q,
                                         to_string(res.status), res.failed_stage));
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(dir / fmt::format("construction1-q{}.cache", q));
  if (out) out << format_quadruple(q, *res.quadruple);
  return *res.quadruple;
}

}  // namespace cage5

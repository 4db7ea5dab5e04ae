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


// cage5 command line front-end.
//
// Exit codes: 0 pass, 1 verification mismatch, 2 input error, 3 search
// exhausted, 4 search budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "cage5/amalgam.hpp"
#include "cage5/catalog.hpp"
#include "cage5/errors.hpp"
#include "cage5/io.hpp"
#include "cage5/records.hpp"
#include "cage5/route.hpp"
#include "cage5/search.hpp"
#include "cage5/semicirculant.hpp"
#include "cage5/semiplane.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace cage5;

namespace {

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kExhausted = 3;
constexpr int kOverBudget = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot read {}", p.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << text)) throw InputError(fmt::format("cannot write {}", p.string()));
}

int search_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kPass;
    case SearchStatus::exhausted: return kExhausted;
    case SearchStatus::budget_exceeded: return kOverBudget;
  }
  return kMismatch;
}

std::string profile_text(const DegreeProfile& p) {
  std::string out;
  for (const auto& [deg, count] : p) out += fmt::format("{}{}^{}", out.empty() ? "" : " ", deg, count);
  return out;
}

std::string girth_text(std::optional<std::size_t> g) { return g ? std::to_string(*g) : "inf"; }

// ---- build ------------------------------------------------------------

struct BuildArgs {
  std::string route;
  std::string out;
  std::string format = "graph6";
};

int cmd_build(const BuildArgs& a, const BuildOptions& opts) {
  const auto route = RouteDescriptor::parse(a.route);
  const BuiltRoute b = build_route(route, opts);
  const std::string cert = certificate_json(b);
  const std::string g6 = to_graph6(b.amalgam.graph);

  if (!a.out.empty()) {
    const fs::path out = a.out;
    if (a.format == "json") {
      json j = json::parse(cert);
      j["graph6"] = g6;
      spit(out, j.dump(2) + "\n");
    } else {
      spit(out, g6 + "\n");
      spit(fs::path(a.out + ".json"), cert + "\n");
    }
    // Re-read what was written before reporting success.
    std::string text = slurp(out);
    if (a.format == "json") text = json::parse(text).at("graph6").get<std::string>();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    const LabeledGraph back = from_graph6(text);
    if (back.order() != b.n || !is_regular(back, b.k) || girth(back) != b.girth) {
      fs::remove(out);
      throw VerificationError("written graph failed re-verification");
    }
  }
  std::cout << cert << "\n";
  return kPass;
}

// ---- verify -----------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::size_t k = 0;
  std::size_t girth_floor = 5;
  std::optional<std::size_t> order;
};

LabeledGraph read_graph_file(const std::string& path) {
  std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const auto j = json::parse(text);
    if (j.contains("graph6")) return from_graph6(j.at("graph6").get<std::string>());
    return from_json(text);
  }
  const auto graphs = read_graph6_file(path);
  if (graphs.size() != 1) throw InputError(fmt::format("{} holds {} graphs, expected one", path, graphs.size()));
  return graphs.front();
}

int cmd_verify(const VerifyArgs& a) {
  const LabeledGraph g = read_graph_file(a.path);
  const auto profile = degree_profile(g);
  const auto gg = girth(g);
  std::cout << fmt::format("n={} degrees={} girth={}\n", g.order(), profile_text(profile), girth_text(gg));
  std::vector<std::string> problems;
  if (!is_regular(g, a.k)) problems.push_back(fmt::format("not {}-regular", a.k));
  if (gg && *gg < a.girth_floor) problems.push_back(fmt::format("girth {} < {}", *gg, a.girth_floor));
  if (a.order && g.order() != *a.order) problems.push_back(fmt::format("order {} != {}", g.order(), *a.order));
  if (problems.empty()) {
    std::cout << "PASS\n";
    return kPass;
  }
  std::string msg;
  for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
  std::cout << "FAIL: " << msg << "\n";
  return kMismatch;
}

// ---- records ----------------------------------------------------------

struct RecordsArgs {
  std::string range = "all";
  std::string out;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  if (s == "all") return {0, SIZE_MAX};
  try {
    const auto dash = s.find('-');
    std::size_t lo = std::stoul(s.substr(0, dash));
    std::size_t hi = dash == std::string::npos ? lo : std::stoul(s.substr(dash + 1));
    if (lo > hi) throw InputError("empty k-range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError(fmt::format("bad k-range '{}', expected all, K or K1-K2", s));
  }
}

int cmd_records(const RecordsArgs& a, const BuildOptions& opts) {
  const auto [lo, hi] = parse_range(a.range);
  const auto rows = run_records(lo, hi, opts);
  if (rows.empty()) throw InputError(fmt::format("no record rows in k-range {}", a.range));
  const std::string csv = records_csv(rows);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    spit(a.out, csv);
  }
  bool ok = true;
  for (const auto& r : rows) {
    if (r.status != RecordStatus::pass) {
      ok = false;
      std::cerr << fmt::format("k={} {}{}\n", r.entry.k, to_string(r.status), r.error.empty() ? "" : ": " + r.error);
    }
  }
  return ok ? kPass : kMismatch;
}

// ---- search -----------------------------------------------------------

struct SearchArgs {
  std::string problem;
  std::string out = ".";
  std::uint64_t budget = kDefaultSearchBudget;
};

GroupSpec parse_group(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return GroupSpec::cyclic(j.at("order").get<std::uint32_t>());
  if (kind == "elementary") return GroupSpec::elementary(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
  throw InputError(fmt::format("unknown group kind '{}'", kind));
}

SearchProblem parse_graph_problem(const json& j) {
  SearchProblem p;
  p.group = parse_group(j.at("group"));
  if (j.contains("carrier")) {
    p.carrier = j.at("carrier").get<std::vector<GroupElem>>();
  } else {
    for (GroupElem a = 0; a < p.group.order(); ++a) p.carrier.push_back(a);
  }
  p.r = j.at("r").get<std::size_t>();
  if (j.contains("high_degree")) p.high_degree = j.at("high_degree").get<std::set<GroupElem>>();
  if (j.contains("palette")) p.palette = j.at("palette").get<std::set<GroupElem>>();
  if (j.contains("forbidden")) {
    for (const auto& e : j.at("forbidden")) p.forbidden.emplace_back(e.at(0).get<GroupElem>(), e.at(1).get<GroupElem>());
  }
  p.girth_floor = j.value("girth_floor", 5u);
  const auto s = j.value("structure", std::string("none"));
  if (s == "petersen") {
    p.structure = StructuralConstraint::petersen;
  } else if (s != "none") {
    throw InputError(fmt::format("unknown structure '{}'", s));
  }
  return p;
}

json graph_report(const LabeledGraph& g, const SearchProblem& p) {
  json r;
  r["order"] = g.order();
  json deg;
  for (const auto& [d, c] : degree_profile(g)) deg[std::to_string(d)] = c;
  r["degrees"] = deg;
  const auto gg = girth(g);
  r["girth"] = gg ? json(*gg) : json(nullptr);
  bool degrees_ok = true;
  for (VertexId v = 0; v < g.order(); ++v) {
    const bool high = p.high_degree.contains(g.label(v));
    degrees_ok = degrees_ok && g.degree(v) == p.r + (high ? 1 : 0);
  }
  r["degrees_ok"] = degrees_ok;
  r["girth_ok"] = !gg || *gg >= p.girth_floor;
  const auto colours = cayley_colors(g);
  r["colours"] = colours;
  r["palette_ok"] = !p.palette || std::includes(p.palette->begin(), p.palette->end(), colours.begin(), colours.end());
  bool avoided = true;
  for (auto [a, b] : p.forbidden) {
    const auto u = g.vertex_with_label(a);
    const auto v = g.vertex_with_label(b);
    if (u && v && g.has_edge(*u, *v)) avoided = false;
  }
  r["forbidden_avoided"] = avoided;
  r["satisfies"] = satisfies(g, p);
  return r;
}

std::string edge_list(const LabeledGraph& g) {
  std::string out;
  for (auto [a, b] : label_edges(g)) out += fmt::format("{} {}\n", a, b);
  return out;
}

LabeledGraph relabel_source(std::uint32_t q) {
  switch (q) {
    case 31:
    case 41: return construction2_pair(q).g0;
    case 32: return q32_pair().g0;
    case 49: return q49_pair().g0;
    case 64: return thm12_pair(6).g0;
    default: throw InputError(fmt::format("no relabelling source graph for q={}", q));
  }
}

std::string perm_text(std::uint32_t q, const LabeledGraph& g0, const std::vector<GroupElem>& perm) {
  const bool binary = g0.group()->kind() == GroupSpec::Kind::elementary && g0.group()->order() > 2;
  unsigned bits = 0;
  while ((1u << bits) < g0.group()->order()) ++bits;
  std::string out = fmt::format("# relabelling for q={}: G0 label -> G1 label\n", q);
  for (GroupElem a = 0; a < perm.size(); ++a) {
    if (binary) {
      out += fmt::format("{} {}\n", bit_string(bits, a), bit_string(bits, perm[a]));
    } else {
      out += fmt::format("{} {}\n", a, perm[a]);
    }
  }
  return out;
}

int cmd_search(const SearchArgs& a, const fs::path& catalog) {
  const json j = json::parse(slurp(a.problem));
  const auto type = j.value("type", std::string("graph"));
  const fs::path out = a.out;
  json report;
  report["type"] = type;

  if (type == "graph") {
    const SearchProblem p = parse_graph_problem(j);
    const auto res = search_graph(p, a.budget);
    report["status"] = to_string(res.status);
    report["nodes"] = res.nodes;
    if (res.graph) {
      report["graph6"] = to_graph6(*res.graph);
      report["checks"] = graph_report(*res.graph, p);
      spit(out / "solution.g6", to_graph6(*res.graph) + "\n");
      spit(out / "solution.edges", edge_list(*res.graph));
    }
    spit(out / "report.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return search_exit(res.status);
  }

  if (type == "construction1") {
    const auto q = j.at("q").get<std::uint32_t>();
    const auto res = search_quadruple(q, a.budget);
    report["q"] = q;
    report["status"] = to_string(res.status);
    report["nodes"] = res.nodes;
    if (!res.quadruple) {
      report["failed_stage"] = res.failed_stage;
    } else {
      const auto& x = *res.quadruple;
      const auto chk = check_biregular_quadruple(x.h0, x.h1, x.g0, x.g1, make_field_of_order(q));
      report["quadruple_ok"] = chk.ok;
      report["r"] = chk.r;
      for (const auto& [name, g] : {std::pair{"G0", &x.g0}, {"G1", &x.g1}, {"H0", &x.h0}, {"H1", &x.h1}}) {
        json gj;
        gj["order"] = g->order();
        gj["girth"] = girth_text(girth(*g));
        gj["degrees"] = profile_text(degree_profile(*g));
        gj["graph6"] = to_graph6(*g);
        report["graphs"][name] = gj;
      }
      if (!chk.ok) throw VerificationError("found quadruple fails the amalgamation check: " + chk.diagnostic);
      const auto cache = catalog / fmt::format("construction1-q{}.cache", q);
      spit(cache, format_quadruple(q, x));
      report["cache"] = cache.string();
    }
    spit(out / fmt::format("construction1-q{}.report.json", q), report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return search_exit(res.status);
  }

  if (type == "relabel") {
    LabeledGraph g0;
    std::uint32_t q = 0;
    if (j.contains("spec")) {
      g0 = build_SPQ(SemicirculantSpec::parse(j.at("spec").get<std::string>()));
      q = static_cast<std::uint32_t>(g0.order()) + 1;
    } else {
      q = j.at("q").get<std::uint32_t>();
      g0 = relabel_source(q);
    }
    std::set<GroupElem> forbidden = cayley_colors(g0);
    if (j.contains("forbidden")) forbidden = j.at("forbidden").get<std::set<GroupElem>>();
    const auto res = search_relabel_partner(g0, forbidden, a.budget);
    report["q"] = q;
    report["status"] = to_string(res.status);
    report["nodes"] = res.nodes;
    if (res.perm) {
      const LabeledGraph g1 = relabel(g0, *res.perm);
      report["colours_disjoint"] = colors_disjoint(g0, g1);
      report["suitable"] = check_suitable_pair(g0, g1, *g0.group()).ok;
      spit(out / fmt::format("relabel-q{}.perm", q), perm_text(q, g0, *res.perm));
    }
    spit(out / fmt::format("relabel-q{}.report.json", q), report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return search_exit(res.status);
  }

  throw InputError(fmt::format("unknown problem type '{}'", type));
}

// ---- export / spec ----------------------------------------------------

struct ExportArgs {
  std::string kind = "C";
  std::uint32_t q = 0;
  std::string out;
};

int cmd_export(const ExportArgs& a) {
  const FieldSpec f = make_field_of_order(a.q);
  const BlockedLevi bl = a.kind == "C" ? build_Cq(f) : a.kind == "L" ? build_Lq(f) : throw InputError("kind must be C or L");
  json j;
  j["kind"] = a.kind;
  j["q"] = a.q;
  j["block_group"] = bl.block_group.to_string();
  j["point_blocks"] = bl.point_blocks;
  j["line_blocks"] = bl.line_blocks;
  spit(a.out + ".g6", to_graph6(bl.graph) + "\n");
  spit(a.out + ".blocks.json", j.dump() + "\n");
  std::cout << fmt::format("{}_{}: n={} regular={} girth={}\n", a.kind, a.q, bl.graph.order(),
                           regularity(bl.graph).value_or(0), girth_text(girth(bl.graph)));
  return kPass;
}

int cmd_spec(const std::string& text) {
  const auto s = SemicirculantSpec::parse(text);
  json j;
  j["spec"] = normalized(s).to_string();
  if (s.evens) {
    const auto c = girth5_conditions(s);
    j["girth5_conditions"] = c.holds();
    if (!c.holds()) j["first_failure"] = c.first_failure();
    if (s.infinite()) {
      j["span"] = span(s);
      j["min_valid_order"] = min_valid_order(s);
    }
  } else {
    j["girth6_condition"] = girth6_condition(s);
  }
  if (!s.infinite()) {
    const LabeledGraph g = s.evens ? build_SPQ(s) : build_S(*s.order, s.odds);
    j["order"] = g.order();
    j["degrees"] = profile_text(degree_profile(g));
    j["girth"] = girth_text(girth(g));
  }
  std::cout << j.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cage5: amalgamated elliptic-semiplane graphs of girth five"};
  app.require_subcommand(1);
  std::string catalog;
  app.add_option("--catalog", catalog, "Catalog directory (relabelling tables, construction1 caches)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build and verify a record route");
  b->add_option("--route,route", build.route, "Route, e.g. \"L q=29 pair=construction2 d=1\"")->required();
  b->add_option("--out", build.out, "Output file");
  b->add_option("--format", build.format)->check(CLI::IsMember({"graph6", "json"}));
  bool no_search = false;
  b->add_flag("--no-search", no_search, "Fail instead of searching when a construction1 cache is missing");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a graph6 file against a claimed degree and girth floor");
  v->add_option("path", verify.path)->required();
  v->add_option("--k", verify.k, "Claimed regularity")->required();
  v->add_option("--girth", verify.girth_floor, "Claimed girth floor");
  v->add_option("--order", verify.order, "Claimed order");

  RecordsArgs records;
  auto* r = app.add_subcommand("records", "Rebuild the record table and compare orders");
  r->add_option("--k-range", records.range, "all, K or K1-K2");
  r->add_option("--out", records.out, "CSV output file (default stdout)");
  r->add_flag("--no-search", no_search, "Fail instead of searching when a construction1 cache is missing");

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Run a search problem (graph, construction1 or relabel)");
  s->add_option("problem", search.problem, "Problem JSON file")->required();
  s->add_option("--out", search.out, "Directory for solution files");
  s->add_option("--budget", search.budget, "Node budget per search stage");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Write a semiplane Levi graph with its block map");
  e->add_option("--kind", exp.kind)->check(CLI::IsMember({"C", "L"}));
  e->add_option("--q", exp.q)->required();
  e->add_option("--out", exp.out, "Output prefix")->required();

  std::string spec_text;
  auto* sp = app.add_subcommand("spec", "Report girth conditions for a semicirculant spec");
  sp->add_option("text", spec_text, "e.g. \"S:2t=inf;P=2;Q=4;K=3,-7\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kPass : kInputError;
  }

  BuildOptions opts;
  opts.catalog_dir = catalog.empty() ? default_catalog_dir() : fs::path(catalog);
  opts.allow_search = !no_search;
  try {
    if (*b) return cmd_build(build, opts);
    if (*v) return cmd_verify(verify);
    if (*r) return cmd_records(records, opts);
    if (*s) {
      opts.budget = search.budget;
      return cmd_search(search, opts.catalog_dir);
    }
    if (*e) return cmd_export(exp);
    if (*sp) return cmd_spec(spec_text);
  } catch (const VerificationError& ex) {
    std::cerr << "verification failed: " << ex.what() << "\n";
    return kMismatch;
  } catch (const SearchFailed& ex) {
    std::cerr << "search failed: " << ex.what() << "\n";
    return search_exit(ex.status());
  } catch (const MissingDataError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const json::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}

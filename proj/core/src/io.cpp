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

#include "cage5/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cage5 {

namespace {

constexpr char kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

int sextet(char c) {
  if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
  return c - kBias;
}

}  // namespace

std::string to_graph6(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  std::vector<char> row(n, 0);
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i : g.neighbors(j)) row[i] = 1;
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | row[i];
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
    for (VertexId i : g.neighbors(j)) row[i] = 0;
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

LabeledGraph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated size");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 4;
  } else {
    if (text.size() < 8) throw std::invalid_argument("graph6: truncated size");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    pos = 8;
  }
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) throw std::invalid_argument("graph6: wrong body length");

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (; bit < expected * 6; ++bit) {
    if ((sextet(text[pos + bit / 6]) >> (5 - bit % 6)) & 1) {
      throw std::invalid_argument("graph6: nonzero padding");
    }
  }
  return std::move(b).build();
}

std::vector<LabeledGraph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<LabeledGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<LabeledGraph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.labeled()) {
    const GroupSpec& grp = *g.group();
    j["group"] = {{"kind", grp.kind() == GroupSpec::Kind::cyclic ? "cyclic" : "elementary"},
                  {"p", grp.prime()},
                  {"m", grp.dimension()}};
    j["labels"] = std::vector<GroupElem>(g.labels().begin(), g.labels().end());
  }
  return j.dump();
}

LabeledGraph from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
  try {
    GraphBuilder b(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) b.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    if (j.contains("labels")) {
      const auto& grp = j.at("group");
      const auto p = grp.at("p").get<std::uint32_t>();
      const auto m = grp.at("m").get<std::uint32_t>();
      GroupSpec group = grp.at("kind").get<std::string>() == "cyclic" ? GroupSpec::cyclic(p)
                                                                        : GroupSpec::elementary(p, m);
      b.set_labels(group, j.at("labels").get<std::vector<GroupElem>>());
    }
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

}  // namespace cage5

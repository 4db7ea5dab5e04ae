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


#include "cage5/records.hpp"

#include <future>
#include <map>
#include <tuple>

#include <fmt/format.h>

namespace cage5 {

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::anomaly: return "anomaly";
  }
  return "?";
}

std::vector<RecordResult> run_records(std::size_t k_min, std::size_t k_max, const BuildOptions& opts) {
  std::vector<RecordResult> out;
  using Family = std::tuple<SemiplaneKind, std::uint32_t, PairSource>;
  std::map<Family, std::vector<std::size_t>> families;
  for (const auto& e : record_table()) {
    if (e.k < k_min || e.k > k_max) continue;
    families[{e.route.kind, e.route.q, e.route.source}].push_back(out.size());
    out.push_back(RecordResult{e, 0, 0, std::nullopt, RecordStatus::fail, {}});
  }
  // Families are independent; each task writes only its own rows.
  std::vector<std::future<void>> tasks;
  for (const auto& [family, rows] : families) {
    tasks.push_back(std::async(std::launch::async, [&out, &opts, &rows] {
      std::optional<Amalgam> base;
      std::string base_error;
      try {
        base = build_base(out[rows.front()].entry.route, opts);
      } catch (const std::exception& ex) {
        base_error = ex.what();
      }
      for (std::size_t i : rows) {
        RecordResult& row = out[i];
        if (!base) {
          row.error = base_error;
          continue;
        }
        try {
          const Amalgam a = row.entry.route.d == 0 ? *base : delete_block_pairs(*base, row.entry.route.d);
          row.built_order = a.graph.order();
          row.regularity = a.regularity();
          row.girth = girth(a.graph);
          const bool shape = row.built_order == row.entry.order && row.regularity == row.entry.k &&
                             is_regular(a.graph, row.entry.k);
          if (shape && row.girth == 5u) {
            row.status = RecordStatus::pass;
          } else if (shape && (!row.girth || *row.girth > 5)) {
            row.status = RecordStatus::anomaly;
          }
        } catch (const std::exception& ex) {
          row.error = ex.what();
        }
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

std::string records_csv(const std::vector<RecordResult>& rows) {
  std::string out = "k,expected_order,built_order,regularity,girth,status,route\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.entry.k, r.entry.order, r.built_order,
                       r.regularity, r.girth ? std::to_string(*r.girth) : std::string("inf"),
                       to_string(r.status), r.entry.route.to_string());
  }
  return out;
}

}  // namespace cage5

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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cage5/catalog.hpp"
#include "cage5/route.hpp"

namespace cage5 {

enum class RecordStatus { pass, fail, anomaly };

std::string to_string(RecordStatus s);

struct RecordResult {
  RecordEntry entry;
  std::uint64_t built_order = 0;
  std::size_t regularity = 0;
  std::optional<std::size_t> girth;
  /// pass: order, regularity and girth 5 all as expected. anomaly: order and
  /// regularity match but the girth exceeds 5.
  RecordStatus status = RecordStatus::fail;
  std::string error;
};

/// Builds every record with k_min <= k <= k_max, sharing one base amalgam per
/// route family. Rows come back ordered by k.
std::vector<RecordResult> run_records(std::size_t k_min, std::size_t k_max,
                                      const BuildOptions& opts = {});

/// "k,expected_order,built_order,regularity,girth,status,route" rows.
std::string records_csv(const std::vector<RecordResult>& rows);

}  // namespace cage5

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

#include <string>
#include <string_view>
#include <vector>

#include "cage5/graph.hpp"

namespace cage5 {

/// graph6 encoding of the unlabelled graph (no header, no newline).
std::string to_graph6(const LabeledGraph& g);

/// Decodes one graph6 line; a trailing newline and the optional
/// ">>graph6<<" header are accepted. Throws std::invalid_argument on malformed
/// input.
LabeledGraph from_graph6(std::string_view text);

/// Reads every non-empty line of a graph6 file.
std::vector<LabeledGraph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<LabeledGraph>& graphs);

/// {"n": .., "edges": [[u,v],..]} plus "group" and "labels" when labelled.
std::string to_json(const LabeledGraph& g);
LabeledGraph from_json(std::string_view text);

}  // namespace cage5

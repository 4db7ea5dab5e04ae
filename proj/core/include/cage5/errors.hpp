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

#include <stdexcept>
#include <string>

namespace cage5 {

/// A construction produced an object that fails its own verification, or its
/// hypotheses do not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Required catalog data (e.g. a construction1 cache) is absent and may not
/// be regenerated.
class MissingDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cage5

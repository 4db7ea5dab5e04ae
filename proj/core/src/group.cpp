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

#include "cage5/group.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace cage5 {

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  return GroupSpec(Kind::cyclic, n, n, 1);
}

GroupSpec GroupSpec::elementary(std::uint32_t p, std::uint32_t m) {
  if (p < 2 || m < 1) throw std::invalid_argument("elementary abelian group needs p >= 2, m >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > (1u << 24)) throw std::invalid_argument("elementary abelian group too large");
  }
  return GroupSpec(Kind::elementary, static_cast<std::uint32_t>(order), p, m);
}

GroupElem GroupSpec::add(GroupElem a, GroupElem b) const noexcept {
  if (kind_ == Kind::cyclic || m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  if (p_ == 2) return a ^ b;
  GroupElem out = 0;
  GroupElem scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GroupElem GroupSpec::neg(GroupElem a) const noexcept {
  if (kind_ == Kind::cyclic || m_ == 1) return a == 0 ? 0 : order_ - a;
  if (p_ == 2) return a;
  GroupElem out = 0;
  GroupElem scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::string GroupSpec::to_string() const {
  if (normalized_kind() == Kind::cyclic) return fmt::format("Z_{}", order_);
  return fmt::format("(Z_{})^{}", p_, m_);
}

}  // namespace cage5

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
#include <string>

namespace cage5 {

/// Element of a finite abelian group, stored as its canonical integer code in
/// [0, order). For an elementary abelian group (Z_p)^m the code is the base-p
/// expansion sum p^i * v_i.
using GroupElem = std::uint32_t;

/// A finite abelian group of one of the two shapes the constructions use:
/// the cyclic group Z_n or the elementary abelian group (Z_p)^m.
class GroupSpec {
 public:
  enum class Kind { cyclic, elementary };

  static GroupSpec cyclic(std::uint32_t n);
  static GroupSpec elementary(std::uint32_t p, std::uint32_t m);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t dimension() const noexcept { return m_; }

  GroupElem zero() const noexcept { return 0; }
  bool contains(GroupElem a) const noexcept { return a < order_; }
  GroupElem add(GroupElem a, GroupElem b) const noexcept;
  GroupElem neg(GroupElem a) const noexcept;
  GroupElem sub(GroupElem a, GroupElem b) const noexcept { return add(a, neg(b)); }

  /// Cyclic(p) and elementary(p, 1) are the same group.
  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
    return a.order_ == b.order_ && a.normalized_kind() == b.normalized_kind() &&
           a.p_ == b.p_;
  }

  std::string to_string() const;

 private:
  GroupSpec(Kind kind, std::uint32_t order, std::uint32_t p, std::uint32_t m)
      : kind_(kind), order_(order), p_(p), m_(m) {}

  Kind normalized_kind() const noexcept {
    return (kind_ == Kind::elementary && m_ == 1) ? Kind::cyclic : kind_;
  }

  Kind kind_;
  std::uint32_t order_;
  std::uint32_t p_;  // cyclic: equals order
  std::uint32_t m_;  // cyclic: 1
};

}  // namespace cage5

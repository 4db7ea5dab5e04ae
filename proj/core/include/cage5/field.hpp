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
#include <vector>

#include "cage5/group.hpp"

namespace cage5 {

/// An element of GF(p^m) held by its canonical code sum p^i * c_i, where c_i
/// is the coefficient of x^i. For p = 2 this is the binary encoding used to
/// identify F_{2^m} with (Z_2)^m.
struct FieldElem {
  std::uint32_t code = 0;

  friend bool operator==(FieldElem, FieldElem) = default;
  friend auto operator<=>(FieldElem, FieldElem) = default;
};

/// Arithmetic in GF(p^m).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m over Z_p, comparing coefficients from x^0 upwards. Addition and
/// multiplication are tabulated at construction; the object is immutable.
class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Coefficients c_0..c_m of the monic modulus (c_m == 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem elem(std::uint32_t code) const;
  std::vector<std::uint32_t> coefficients(FieldElem a) const;
  FieldElem from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws std::domain_error for a == 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  std::uint32_t multiplicative_order(FieldElem a) const;

  /// First element in code order whose multiplicative order is q - 1.
  /// Requires q >= 3.
  FieldElem primitive_element() const;

  /// Discrete logarithm to the base primitive_element(). Throws for a == 0.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(std::uint64_t e) const noexcept;

  /// (F_q, +) as an abstract group; codes coincide with field codes.
  GroupSpec additive_group() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldSpec make_field(std::uint32_t p, std::uint32_t m);
  FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;  // q*q
  std::vector<std::uint32_t> mul_;  // q*q
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;  // inv_[0] unused
  std::uint32_t primitive_ = 0;     // 0 when q < 3
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Builds GF(p^m). Throws std::invalid_argument if p is not prime, m < 1, or
/// p^m exceeds 1024 (addition and multiplication are tabulated).
FieldSpec make_field(std::uint32_t p, std::uint32_t m);

/// Builds GF(q) for a prime power q; throws if q is not one.
FieldSpec make_field_of_order(std::uint32_t q);

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, m) with q = p^m, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q) noexcept;

/// Irreducibility over Z_p by trial division with every monic polynomial of
/// degree 1..deg/2. `poly` holds coefficients low degree first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Smallest e >= 0 with g^e == a, by exhaustive stepping. Throws for a == 0 or
/// when a is not a power of g.
std::uint32_t discrete_log(const FieldSpec& f, FieldElem g, FieldElem a);

}  // namespace cage5

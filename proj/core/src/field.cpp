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

#include "cage5/field.hpp"

#include <stdexcept>
#include <utility>

namespace cage5 {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over Z_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
  // Monic polynomial of the given degree; lower coefficients from the base-p
  // digits of index, c_0 the most significant digit.
  Poly out(degree + 1, 0);
  out[degree] = 1;
  for (std::uint32_t i = degree; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint32_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return {0, 0};
  return {p, m};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2) return false;
  const auto degree = static_cast<std::uint32_t>(a.size() - 1);
  if (degree == 1) return true;
  for (std::uint32_t d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(a, poly_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be >= 1");
  if (ipow(p, m) > 1024) throw std::invalid_argument("field order too large");
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly candidate = poly_from_index(idx, m, p);
    if (is_irreducible(candidate, p)) return FieldSpec(p, m, std::move(candidate));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldSpec make_field_of_order(std::uint32_t q) {
  const auto [p, m] = prime_power_decomposition(q);
  if (p == 0) throw std::invalid_argument("field order must be a prime power");
  return make_field(p, m);
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
  const std::uint32_t q = q_;
  add_.resize(std::size_t{q} * q);
  mul_.resize(std::size_t{q} * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<Poly> coeffs(q);
  for (std::uint32_t a = 0; a < q; ++a) coeffs[a] = coefficients({a});

  auto encode = [&](const Poly& c) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
  };

  for (std::uint32_t a = 0; a < q; ++a) {
    Poly n(m);
    for (std::uint32_t i = 0; i < m; ++i) n[i] = (p - coeffs[a][i]) % p;
    neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly s(m);
      for (std::uint32_t i = 0; i < m; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      add_[std::size_t{a} * q + b] = encode(s);

      Poly prod(2 * m - 1, 0);
      for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
          prod[i + j] = (prod[i + j] + coeffs[a][i] * coeffs[b][j]) % p;
        }
      }
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(m, 0);
      mul_[std::size_t{a} * q + b] = encode(r);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul_[std::size_t{a} * q + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  if (q >= 3) {
    for (std::uint32_t a = 1; a < q; ++a) {
      if (multiplicative_order({a}) == q - 1) {
        primitive_ = a;
        break;
      }
    }
    log_.assign(q, 0);
    exp_.resize(q - 1);
    std::uint32_t x = 1;
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
      exp_[e] = x;
      log_[x] = e;
      x = mul_[std::size_t{x} * q + primitive_];
    }
  }
}

FieldElem FieldSpec::elem(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  return {code};
}

std::vector<std::uint32_t> FieldSpec::coefficients(FieldElem a) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t c = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElem FieldSpec::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != m_) throw std::invalid_argument("coefficient vector has wrong length");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient not reduced mod p");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const noexcept {
  return {add_[std::size_t{a.code} * q_ + b.code]};
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldSpec::neg(FieldElem a) const noexcept { return {neg_[a.code]}; }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const noexcept {
  return {mul_[std::size_t{a.code} * q_ + b.code]};
}

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return {inv_[a.code]};
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldSpec::multiplicative_order(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  FieldElem x = a;
  while (x != one()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

FieldElem FieldSpec::primitive_element() const {
  if (q_ < 3) throw std::domain_error("primitive element requires q >= 3");
  return {primitive_};
}

std::uint32_t FieldSpec::log(FieldElem a) const {
  if (q_ < 3) throw std::domain_error("discrete log requires q >= 3");
  if (a.code == 0) throw std::domain_error("discrete log of zero");
  return log_[a.code];
}

FieldElem FieldSpec::exp(std::uint64_t e) const noexcept {
  if (q_ < 3) return one();
  return {exp_[e % (q_ - 1)]};
}

GroupSpec FieldSpec::additive_group() const {
  return m_ == 1 ? GroupSpec::cyclic(p_) : GroupSpec::elementary(p_, m_);
}

std::uint32_t discrete_log(const FieldSpec& f, FieldElem g, FieldElem a) {
  if (a.code == 0) throw std::domain_error("discrete log of zero");
  FieldElem x = f.one();
  for (std::uint32_t e = 0; e + 1 < f.q() || e == 0; ++e) {
    if (x == a) return e;
    x = f.mul(x, g);
  }
  throw std::domain_error("element is not a power of the base");
}

}  // namespace cage5

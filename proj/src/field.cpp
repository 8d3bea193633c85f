// Copyright 2026 The crdcache Authors
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


#include "crd/field.hpp"

#include <map>
#include <utility>

namespace crd {

namespace {

// Low-to-high coefficients, without the leading 1.
const std::map<std::pair<std::uint32_t, std::uint32_t>,
               std::vector<std::uint32_t>>&
irreducibles() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>,
                        std::vector<std::uint32_t>>
      table = {
          {{2, 2}, {1, 1}},        {{2, 3}, {1, 1, 0}},
          {{2, 4}, {1, 1, 0, 0}},  {{2, 5}, {1, 0, 1, 0, 0}},
          {{3, 2}, {2, 2}},        {{3, 3}, {1, 2, 0}},
          {{5, 2}, {2, 4}},
      };
  return table;
}

std::vector<std::uint32_t> digits(std::uint32_t label, std::uint32_t p,
                                  std::uint32_t s) {
  std::vector<std::uint32_t> out(s);
  for (std::uint32_t i = 0; i < s; ++i) {
    out[i] = label % p;
    label /= p;
  }
  return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& coeffs,
                       std::uint32_t p) {
  std::uint32_t label = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) label = label * p + coeffs[i];
  return label;
}

}  // namespace

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {};
  return {p, e};
}

FieldTable::FieldTable(std::uint32_t q) : q_(q) {
  const PrimePower pp = factor_prime_power(q);
  if (!pp.valid()) {
    throw UnsupportedField("field order " + std::to_string(q) +
                           " is not a prime power");
  }
  if (q > kMaxOrder) {
    throw UnsupportedField("field order " + std::to_string(q) +
                           " exceeds the supported maximum of " +
                           std::to_string(kMaxOrder));
  }
  p_ = static_cast<std::uint32_t>(pp.prime);
  s_ = pp.exponent;
  if (s_ > 1) {
    modulus_ = irreducibles().at({p_, s_});
    modulus_.push_back(1);
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, s_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, s_);
      std::vector<std::uint32_t> sum(s_);
      for (std::uint32_t i = 0; i < s_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<std::uint8_t>(undigits(sum, p_));

      // Schoolbook product, then reduce the high terms using
      // x^s = -(m_0 + m_1 x + ... + m_{s-1} x^{s-1}).
      std::vector<std::uint32_t> prod(2 * s_ - 1, 0);
      for (std::uint32_t i = 0; i < s_; ++i) {
        for (std::uint32_t j = 0; j < s_; ++j) {
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
      }
      for (std::size_t deg = prod.size(); deg-- > s_;) {
        const std::uint32_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::uint32_t i = 0; i < s_; ++i) {
          const std::uint32_t shift = deg - s_ + i;
          prod[shift] = (prod[shift] + (p_ - (c * modulus_[i]) % p_) % p_) % p_;
        }
      }
      prod.resize(s_);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(undigits(prod, p_));
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add(a, b) == 0) neg_[a] = static_cast<std::uint8_t>(b);
      if (a != 0 && mul(a, b) == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  verify_axioms();
}

FieldTable::Element FieldTable::inv(Element a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

void FieldTable::verify_axioms() const {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") table violates " +
                           what);
  };
  for (Element a = 0; a < q_; ++a) {
    if (add(a, 0) != a) fail("additive identity");
    if (mul(a, 1) != a) fail("multiplicative identity");
    if (add(a, neg(a)) != 0) fail("additive inverse");
    if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverse");
    for (Element b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a)) fail("commutativity of +");
      if (mul(a, b) != mul(b, a)) fail("commutativity of *");
      for (Element c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("associativity of +");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity of *");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          fail("distributivity");
        }
      }
    }
  }
}

FieldTable build_field(std::uint32_t q) { return FieldTable(q); }

}  // namespace crd

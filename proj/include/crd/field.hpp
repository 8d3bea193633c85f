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


#ifndef CRD_FIELD_HPP_
#define CRD_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crd {

class UnsupportedField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation tables of GF(q) for prime powers q <= 32.
//
// An element of GF(p^s) is labeled by the base-p digits of its polynomial
// coefficients: c_0 + c_1 x + ... + c_{s-1} x^{s-1} has label
// c_0 + c_1 p + ... + c_{s-1} p^{s-1}. For p = 2 the label is the coefficient
// bitmask. Label 0 is the additive identity, label 1 the multiplicative one.
//
// Prime-power fields reduce modulo these fixed irreducible (Conway)
// polynomials:
//
//   q = 4   x^2 + x + 1          q = 9   x^2 + 2x + 2
//   q = 8   x^3 + x + 1          q = 25  x^2 + 4x + 2
//   q = 16  x^4 + x + 1          q = 27  x^3 + 2x + 1
//   q = 32  x^5 + x^2 + 1
//
// The constructor checks every field axiom exhaustively before returning.
class FieldTable {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMaxOrder = 32;

  explicit FieldTable(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return s_; }
  // Low-to-high coefficients of the reduction polynomial (monic, degree s);
  // empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // Throws std::domain_error for a = 0.
  Element inv(Element a) const;

 private:
  void verify_axioms() const;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t s_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

// Throws UnsupportedField unless q is a prime power no larger than 32.
FieldTable build_field(std::uint32_t q);

// (p, s) with q = p^s, or nullopt-like {0, 0} when q is not a prime power.
struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
  bool valid() const { return prime != 0; }
};
PrimePower factor_prime_power(std::uint64_t q);

}  // namespace crd

#endif  // CRD_FIELD_HPP_

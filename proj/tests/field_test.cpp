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

#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

namespace crd {
namespace {

// Reference reduction polynomials, low-to-high coefficients, monic.
const std::map<std::uint32_t, std::vector<std::uint32_t>> kModuli = {
    {4, {1, 1, 1}},        {8, {1, 1, 0, 1}},    {16, {1, 1, 0, 0, 1}},
    {32, {1, 0, 1, 0, 0, 1}}, {9, {2, 2, 1}},    {25, {2, 4, 1}},
    {27, {1, 2, 0, 1}},
};

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p,
                                  std::uint32_t s) {
  std::vector<std::uint32_t> out(s);
  for (auto& d : out) {
    d = a % p;
    a /= p;
  }
  return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t out = 0;
  for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
  return out;
}

// Schoolbook product followed by long division by the modulus.
std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                       const std::vector<std::uint32_t>& modulus) {
  const std::uint32_t s = static_cast<std::uint32_t>(modulus.size() - 1);
  auto da = digits(a, p, s);
  auto db = digits(b, p, s);
  std::vector<std::uint32_t> prod(2 * s, 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    for (std::uint32_t j = 0; j < s; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  for (std::uint32_t deg = 2 * s - 1; deg >= s; --deg) {
    std::uint32_t lead = prod[deg];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= s; ++i) {
      std::uint32_t idx = deg - s + i;
      prod[idx] = (prod[idx] + p * p - lead * modulus[i] % p) % p;
    }
  }
  prod.resize(s);
  return undigits(prod, p);
}

TEST(Field, PrimeExamples) {
  auto f3 = build_field(3);
  EXPECT_EQ(f3.mul(2, 2), 1u);
  EXPECT_EQ(f3.add(2, 2), 1u);
  EXPECT_EQ(f3.inv(2), 2u);
  auto f7 = build_field(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      EXPECT_EQ(f7.mul(a, b), a * b % 7);
      EXPECT_EQ(f7.add(a, b), (a + b) % 7);
    }
  }
}

TEST(Field, Order4Example) {
  auto f4 = build_field(4);
  EXPECT_EQ(f4.mul(2, 2), 3u);
  EXPECT_EQ(f4.add(2, 3), 1u);
}

TEST(Field, ExtensionFieldsMatchPolynomialOracle) {
  for (const auto& [q, modulus] : kModuli) {
    auto f = build_field(q);
    const std::uint32_t p = f.characteristic();
    EXPECT_EQ(f.modulus(), modulus) << q;
    for (std::uint32_t a = 0; a < q; ++a) {
      auto da = digits(a, p, f.degree());
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = digits(b, p, f.degree());
        std::vector<std::uint32_t> sum(f.degree());
        for (std::uint32_t i = 0; i < f.degree(); ++i) {
          sum[i] = (da[i] + db[i]) % p;
        }
        ASSERT_EQ(f.add(a, b), undigits(sum, p)) << q << ": " << a << "+" << b;
        ASSERT_EQ(f.mul(a, b), poly_mul(a, b, p, modulus))
            << q << ": " << a << "*" << b;
      }
    }
  }
}

TEST(Field, InversesProperty) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u, 19u,
                          23u, 25u, 27u, 29u, 31u, 32u}) {
    auto f = build_field(q);
    EXPECT_EQ(f.order(), q);
    for (std::uint32_t a = 1; a < q; ++a) {
      ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << q << " " << a;
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(Field, Unsupported) {
  EXPECT_THROW(build_field(6), UnsupportedField);
  EXPECT_THROW(build_field(1), UnsupportedField);
  EXPECT_THROW(build_field(0), UnsupportedField);
  EXPECT_THROW(build_field(12), UnsupportedField);
  EXPECT_THROW(build_field(37), UnsupportedField);
  EXPECT_THROW(build_field(64), UnsupportedField);
}

TEST(PrimePowerFactor, Values) {
  EXPECT_EQ(factor_prime_power(27).prime, 3u);
  EXPECT_EQ(factor_prime_power(27).exponent, 3u);
  EXPECT_EQ(factor_prime_power(97).exponent, 1u);
  EXPECT_FALSE(factor_prime_power(100).valid());
  EXPECT_FALSE(factor_prime_power(1).valid());
}

}  // namespace
}  // namespace crd

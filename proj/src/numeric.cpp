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


#include "crd/numeric.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace crd {

BigInt big_binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0 || BigInt(k) > n) return 0;
  if (BigInt(2 * k) > n) k = static_cast<std::uint64_t>(n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_decimal(const Rational& value, int digits) {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  const Dec num(boost::multiprecision::numerator(value));
  const Dec den(boost::multiprecision::denominator(value));
  return Dec(num / den).str(digits);
}

}  // namespace crd

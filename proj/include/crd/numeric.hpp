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


#ifndef CRD_NUMERIC_HPP_
#define CRD_NUMERIC_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_binomial(const BigInt& n, std::uint64_t k);
BigInt big_pow(const BigInt& base, std::uint64_t exp);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Decimal rendering with `digits` significant digits (printf %g style).
std::string to_decimal(const Rational& value, int digits = 12);

}  // namespace crd

#endif  // CRD_NUMERIC_HPP_

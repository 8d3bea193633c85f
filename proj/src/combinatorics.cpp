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


#include "crd/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace crd {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("64-bit overflow in combinatorial count");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step; divide out the
    // gcd first so the intermediate product overflows as late as possible.
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g1 = std::gcd(result, den);
    result /= g1;
    den /= g1;
    num /= den;
    result = checked_mul(result, num);
  }
  return result;
}

bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n) {
  const std::size_t k = combo.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t n,
                                                     std::uint32_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k > n) return out;
  std::vector<std::uint32_t> combo(k);
  std::iota(combo.begin(), combo.end(), 0u);
  do {
    out.push_back(combo);
  } while (next_combination(combo, n));
  return out;
}

std::uint64_t combination_rank(std::span<const std::uint32_t> combo,
                               std::uint32_t n) {
  const std::uint64_t k = combo.size();
  std::uint64_t rank = 0;
  std::int64_t prev = -1;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::int64_t j = prev + 1; j < static_cast<std::int64_t>(combo[i]);
         ++j) {
      rank += binomial(n - 1 - static_cast<std::uint64_t>(j), k - 1 - i);
    }
    prev = combo[i];
  }
  return rank;
}

}  // namespace crd

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


#ifndef CRD_COMBINATORICS_HPP_
#define CRD_COMBINATORICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace crd {

// Exact C(n, k) in 64 bits; throws std::overflow_error when the value does
// not fit. Returns 0 for k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Advances `combo` (strictly increasing indices drawn from 0..n-1) to its
// lexicographic successor. Returns false, leaving `combo` unspecified, when
// `combo` was the last combination.
bool next_combination(std::vector<std::uint32_t>& combo, std::uint32_t n);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t n,
                                                     std::uint32_t k);

// Position of `combo` in the lexicographic listing of k-subsets of {0..n-1}.
std::uint64_t combination_rank(std::span<const std::uint32_t> combo,
                               std::uint32_t n);

// Throws std::overflow_error on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace crd

#endif  // CRD_COMBINATORICS_HPP_

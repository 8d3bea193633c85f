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


#ifndef CRD_TESTS_TEST_SUPPORT_HPP_
#define CRD_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "crd/design.hpp"
#include "crd/rng.hpp"

namespace crd::testing {

using PointSetStd = std::set<Point>;

inline PointSetStd as_set(const Block& block) {
  return PointSetStd(block.begin(), block.end());
}

inline PointSetStd all_points(std::uint32_t v) {
  PointSetStd out;
  for (Point p = 1; p <= v; ++p) out.insert(p);
  return out;
}

inline PointSetStd intersect(const PointSetStd& a, const PointSetStd& b) {
  PointSetStd out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

inline PointSetStd unite(const PointSetStd& a, const PointSetStd& b) {
  PointSetStd out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline PointSetStd minus(const PointSetStd& a, const PointSetStd& b) {
  PointSetStd out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

// Fisher-Yates driven by SplitMix64.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.next() % i;
    std::swap(items[i - 1], items[j]);
  }
}

inline std::vector<Point> random_permutation(std::uint32_t v,
                                             SplitMix64& rng) {
  std::vector<Point> perm(v);
  std::iota(perm.begin(), perm.end(), Point{1});
  shuffle(perm, rng);
  return perm;
}

// Relabels points by perm (p -> perm[p-1]) and shuffles class and block
// order. Sorts blocks so the result is a well-formed design.
inline ResolvableDesign scramble(const ResolvableDesign& design,
                                 SplitMix64& rng) {
  auto perm = random_permutation(design.v, rng);
  ResolvableDesign out{design.v, design.classes};
  for (auto& cls : out.classes) {
    for (auto& block : cls) {
      for (auto& p : block) p = perm[p - 1];
      std::sort(block.begin(), block.end());
    }
    shuffle(cls, rng);
  }
  shuffle(out.classes, rng);
  return out;
}

}  // namespace crd::testing

#endif  // CRD_TESTS_TEST_SUPPORT_HPP_

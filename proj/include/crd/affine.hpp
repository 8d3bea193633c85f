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


#ifndef CRD_AFFINE_HPP_
#define CRD_AFFINE_HPP_

#include <cstdint>

#include "crd/design.hpp"

namespace crd {

struct AffineParams {
  std::uint32_t q = 0;  // field order, prime power <= 32
  std::uint32_t m = 0;  // dimension >= 2
};

// Affine resolvable design of AG(m, q): points are the vectors of GF(q)^m,
// one parallel class per normalized nonzero linear functional a (first
// nonzero coordinate 1), and block c of that class is {x : a.x = c}.
//
// Vector x = (x_0, ..., x_{m-1}) gets label 1 + sum_j x_j q^(m-1-j), so
// points and functionals both run in mixed-radix order with x_0 most
// significant. Blocks within a class follow the field label of c.
//
// The result has v = q^m, k = q^(m-1), r = (q^m - 1)/(q - 1), b = q r, and
// any two blocks from distinct classes meet in q^(m-2) points.
//
// Throws UnsupportedField for bad q, std::invalid_argument for m < 2 and
// std::length_error when r * v exceeds kMaxAffineIncidences.
inline constexpr std::uint64_t kMaxAffineIncidences = std::uint64_t{1} << 22;
ResolvableDesign affine_resolvable(AffineParams params);

}  // namespace crd

#endif  // CRD_AFFINE_HPP_

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


#include "crd/affine.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "crd/combinatorics.hpp"
#include "crd/field.hpp"

namespace crd {

namespace {

std::vector<std::uint32_t> coordinates(std::uint64_t index, std::uint32_t q,
                                       std::uint32_t m) {
  std::vector<std::uint32_t> x(m);
  for (std::uint32_t j = m; j-- > 0;) {
    x[j] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return x;
}

}  // namespace

ResolvableDesign affine_resolvable(AffineParams params) {
  const FieldTable field = build_field(params.q);
  const std::uint32_t q = params.q;
  const std::uint32_t m = params.m;
  if (m < 2) {
    throw std::invalid_argument("affine dimension m must be >= 2, got " +
                                std::to_string(m));
  }
  const std::uint64_t v = checked_pow(q, m);
  const std::uint64_t r = (v - 1) / (q - 1);
  if (checked_mul(r, v) > kMaxAffineIncidences) {
    throw std::length_error("affine design q=" + std::to_string(q) +
                            " m=" + std::to_string(m) + " is too large");
  }

  std::vector<std::vector<std::uint32_t>> points(v);
  for (std::uint64_t i = 0; i < v; ++i) points[i] = coordinates(i, q, m);

  ResolvableDesign design;
  design.v = static_cast<std::uint32_t>(v);
  design.classes.reserve(r);
  for (std::uint64_t ai = 1; ai < v; ++ai) {
    const auto& a = points[ai];
    std::uint32_t lead = 0;
    while (a[lead] == 0) ++lead;
    if (a[lead] != 1) continue;

    ParallelClass cls(q);
    for (std::uint64_t xi = 0; xi < v; ++xi) {
      const auto& x = points[xi];
      std::uint32_t dot = 0;
      for (std::uint32_t j = 0; j < m; ++j) {
        dot = field.add(dot, field.mul(a[j], x[j]));
      }
      cls[dot].push_back(static_cast<Point>(xi + 1));
    }
    design.classes.push_back(std::move(cls));
  }
  return design;
}

}  // namespace crd

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


#ifndef CRD_DESIGN_HPP_
#define CRD_DESIGN_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace crd {

// Points are labeled 1..v. Blocks are kept sorted ascending.
using Point = std::uint32_t;
using Block = std::vector<Point>;
using ParallelClass = std::vector<Block>;

// Bit p-1 is set iff point p is in the set.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

PointSet to_point_set(const Block& block, std::uint32_t v);
std::vector<Point> to_points(const PointSet& set);

// A design together with an ordered resolution into parallel classes.
//
// Class and block order are significant: users, groups and transmissions are
// all enumerated against this order. Class and block indices in the C++ API
// are 0-based; everything printed for humans is 1-based.
struct ResolvableDesign {
  std::uint32_t v = 0;
  std::vector<ParallelClass> classes;

  std::size_t r() const { return classes.size(); }
  std::size_t blocks_per_class() const {
    return classes.empty() ? 0 : classes.front().size();
  }
  std::size_t b() const;
  std::size_t k() const;

  friend bool operator==(const ResolvableDesign&,
                         const ResolvableDesign&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks block size uniformity, label range, disjointness and coverage within
// every class, and b_r = v / k. Never throws.
ValidationReport validate(const ResolvableDesign& design);

// Exhaustive check over every i-subset of classes and every choice of one
// block per class. Returns the common intersection size when it is constant
// and nonzero. Throws std::invalid_argument unless 2 <= i <= r.
std::optional<std::uint32_t> cross_intersection(const ResolvableDesign& design,
                                                std::size_t i);

struct CrdProfile {
  // Keys 2..r; nullopt where mu_i does not exist.
  std::map<std::size_t, std::optional<std::uint32_t>> mu;
  std::optional<std::size_t> crn;
  bool is_crd = false;
  bool is_mcrd = false;

  std::optional<std::uint32_t> mu_at(std::size_t i) const;
};

CrdProfile crd_profile(const ResolvableDesign& design);

// Resolution discovery by exact-cover backtracking. Each new class is seeded
// by the lowest-index unassigned block and completed by covering the lowest
// uncovered point with the lowest-index fitting block. Non-uniform block
// sizes or k not dividing v simply have no resolution. Throws
// std::length_error for more than kMaxResolutionBlocks blocks and
// std::invalid_argument for empty blocks or labels outside 1..v.
inline constexpr std::size_t kMaxResolutionBlocks = 64;
std::optional<ResolvableDesign> find_resolution(std::uint32_t v,
                                                std::vector<Block> blocks);

// Maps arbitrary integer point labels onto 1..v in ascending label order.
struct RelabeledDesign {
  ResolvableDesign design;
  std::vector<std::int64_t> original_labels;  // [p - 1] -> original label
};
RelabeledDesign relabel_points(
    const std::vector<std::vector<std::vector<std::int64_t>>>& classes);

}  // namespace crd

#endif  // CRD_DESIGN_HPP_

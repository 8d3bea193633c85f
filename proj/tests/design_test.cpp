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


#include "crd/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "crd/affine.hpp"
#include "crd/builtin.hpp"
#include "crd/combinatorics.hpp"
#include "test_support.hpp"

namespace crd {
namespace {

using testing::as_set;
using testing::intersect;

// All intersection sizes over i blocks from i distinct classes, by plain
// enumeration of every class subset and block tuple.
std::set<std::size_t> intersection_sizes(const ResolvableDesign& d,
                                         std::size_t i) {
  std::set<std::size_t> sizes;
  for (const auto& cls : combinations(static_cast<std::uint32_t>(d.r()),
                                      static_cast<std::uint32_t>(i))) {
    std::vector<std::size_t> pick(i, 0);
    while (true) {
      auto acc = as_set(d.classes[cls[0]][pick[0]]);
      for (std::size_t s = 1; s < i; ++s) {
        acc = intersect(acc, as_set(d.classes[cls[s]][pick[s]]));
      }
      sizes.insert(acc.size());
      std::size_t pos = i;
      while (pos > 0 && ++pick[pos - 1] == d.blocks_per_class()) {
        pick[--pos] = 0;
      }
      if (pos == 0) break;
    }
  }
  return sizes;
}

std::optional<std::uint32_t> oracle_mu(const ResolvableDesign& d,
                                       std::size_t i) {
  auto sizes = intersection_sizes(d, i);
  if (sizes.size() != 1 || *sizes.begin() == 0) return std::nullopt;
  return static_cast<std::uint32_t>(*sizes.begin());
}

TEST(Validate, BuiltinsAreValid) {
  for (const auto& name : builtin_names()) {
    EXPECT_TRUE(validate(builtin(name)).ok()) << name;
  }
}

TEST(Validate, OverlappingClass) {
  ResolvableDesign d{4, {{{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}}};
  auto report = validate(d);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.summary().find("class 1 not disjoint"), std::string::npos)
      << report.summary();
}

TEST(Validate, MissingPointAndBadLabels) {
  ResolvableDesign d{5, {{{1, 2}, {3, 4}}}};
  auto report = validate(d);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.summary().find("does not cover"), std::string::npos);

  ResolvableDesign out_of_range{4, {{{1, 2}, {3, 9}}}};
  EXPECT_FALSE(validate(out_of_range).ok());

  ResolvableDesign uneven{6, {{{1, 2, 3}, {4, 5, 6}}, {{1, 2}, {3, 4}, {5, 6}}}};
  EXPECT_FALSE(validate(uneven).ok());
}

TEST(CrossIntersection, ExampleValues) {
  auto ex1 = builtin("example1");
  EXPECT_EQ(cross_intersection(ex1, 2), 1u);
  EXPECT_EQ(cross_intersection(ex1, 3), std::nullopt);

  auto ex4 = builtin("example4");
  EXPECT_EQ(cross_intersection(ex4, 2), 2u);
  EXPECT_EQ(cross_intersection(ex4, 3), 1u);

  EXPECT_EQ(cross_intersection(builtin("example2"), 2), std::nullopt);
  EXPECT_EQ(cross_intersection(builtin("example3"), 2), 1u);
  EXPECT_EQ(cross_intersection(builtin("example5"), 2), 3u);
  EXPECT_EQ(cross_intersection(builtin("example7"), 2), 3u);
  EXPECT_EQ(cross_intersection(builtin("example7"), 3), 1u);
  EXPECT_EQ(cross_intersection(builtin("example8"), 2), 1u);
  EXPECT_EQ(cross_intersection(builtin("example8"), 3), std::nullopt);
}

TEST(CrossIntersection, RangeChecked) {
  auto ex4 = builtin("example4");
  EXPECT_THROW(cross_intersection(ex4, 1), std::invalid_argument);
  EXPECT_THROW(cross_intersection(ex4, 4), std::invalid_argument);
}

TEST(CrossIntersection, MatchesEnumerationOracle) {
  for (const auto& name : builtin_names()) {
    auto d = builtin(name);
    for (std::size_t i = 2; i <= d.r(); ++i) {
      EXPECT_EQ(cross_intersection(d, i), oracle_mu(d, i)) << name << " i=" << i;
    }
  }
}

TEST(Profile, Examples) {
  auto p6 = crd_profile(builtin("example6"));
  EXPECT_EQ(p6.mu_at(2), 1u);
  EXPECT_EQ(p6.mu_at(3), std::nullopt);
  EXPECT_EQ(p6.mu_at(4), std::nullopt);
  EXPECT_EQ(p6.crn, 2u);
  EXPECT_TRUE(p6.is_crd);
  EXPECT_FALSE(p6.is_mcrd);

  auto p4 = crd_profile(builtin("example4"));
  EXPECT_EQ(p4.crn, 3u);
  EXPECT_TRUE(p4.is_mcrd);

  auto p2 = crd_profile(builtin("example2"));
  EXPECT_FALSE(p2.is_crd);
  EXPECT_FALSE(p2.is_mcrd);
  EXPECT_EQ(p2.crn, std::nullopt);

  auto p7 = crd_profile(builtin("example7"));
  EXPECT_EQ(p7.mu_at(2), 3u);
  EXPECT_EQ(p7.mu_at(3), 1u);
  EXPECT_TRUE(p7.is_mcrd);
}

TEST(Profile, InvalidDesignStillProfiled) {
  ResolvableDesign d{4, {{{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}}};
  auto p = crd_profile(d);
  EXPECT_EQ(p.mu.size(), 1u);
  EXPECT_EQ(p.mu_at(2), 1u);
  ResolvableDesign uneven{4, {{{1, 2}, {3, 4}}, {{1, 2, 3}, {4}}}};
  EXPECT_FALSE(crd_profile(uneven).is_crd);
}

std::vector<ResolvableDesign> property_corpus() {
  std::vector<ResolvableDesign> out;
  for (const auto& name : builtin_names()) out.push_back(builtin(name));
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 4}}) {
    out.push_back(affine_resolvable({q, m}));
  }
  return out;
}

TEST(Profile, PermutationInvarianceProperty) {
  SplitMix64 rng(7);
  for (const auto& d : property_corpus()) {
    auto base = crd_profile(d);
    for (int trial = 0; trial < 5; ++trial) {
      auto scrambled = testing::scramble(d, rng);
      ASSERT_TRUE(validate(scrambled).ok());
      auto p = crd_profile(scrambled);
      EXPECT_EQ(p.mu, base.mu);
      EXPECT_EQ(p.crn, base.crn);
    }
  }
}

TEST(Profile, BoundsAndRatioProperty) {
  for (const auto& d : property_corpus()) {
    auto p = crd_profile(d);
    for (std::size_t i = 2; i <= d.r(); ++i) {
      auto mu = p.mu_at(i);
      if (!mu) continue;
      EXPECT_GE(*mu, 1u);
      EXPECT_LE(*mu, d.k());
      // Summing over the blocks of one more class partitions the intersection.
      if (i > 2) {
        auto prev = p.mu_at(i - 1);
        ASSERT_TRUE(prev.has_value());
        EXPECT_EQ(*prev, d.blocks_per_class() * *mu);
      }
    }
  }
}

TEST(FindResolution, Example1Blocks) {
  std::vector<Block> blocks{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  auto found = find_resolution(4, blocks);
  ASSERT_TRUE(found.has_value());
  ResolvableDesign expected{
      4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}}};
  EXPECT_EQ(*found, expected);
}

TEST(FindResolution, Absent) {
  EXPECT_EQ(find_resolution(3, {{1, 2}, {1, 3}}), std::nullopt);
  EXPECT_EQ(find_resolution(4, {{1, 2}, {1, 3}, {2, 4}}), std::nullopt);
  EXPECT_EQ(find_resolution(4, {{1, 2}, {2, 3}}), std::nullopt);
}

TEST(FindResolution, Oversize) {
  std::vector<Block> blocks(65, Block{1, 2});
  EXPECT_THROW(find_resolution(2, blocks), std::length_error);
}

// Every partition of the blocks into parallel classes, found by choosing
// among all b_r-subsets that tile X.
std::set<std::set<std::set<Block>>> all_resolutions(std::uint32_t v,
                                                   const std::vector<Block>& blocks) {
  const std::uint32_t k = static_cast<std::uint32_t>(blocks.front().size());
  const std::uint32_t per = v / k;
  std::vector<std::vector<std::uint32_t>> tilings;
  for (const auto& combo :
       combinations(static_cast<std::uint32_t>(blocks.size()), per)) {
    std::set<Point> seen;
    for (auto idx : combo) seen.insert(blocks[idx].begin(), blocks[idx].end());
    if (seen.size() == v) tilings.push_back(combo);
  }
  std::set<std::set<std::set<Block>>> out;
  const std::size_t classes = blocks.size() / per;
  for (const auto& pick :
       combinations(static_cast<std::uint32_t>(tilings.size()),
                    static_cast<std::uint32_t>(classes))) {
    std::set<std::uint32_t> used;
    std::set<std::set<Block>> partition;
    for (auto t : pick) {
      std::set<Block> cls;
      for (auto idx : tilings[t]) {
        used.insert(idx);
        cls.insert(blocks[idx]);
      }
      partition.insert(cls);
    }
    if (used.size() == blocks.size()) out.insert(partition);
  }
  return out;
}

std::set<std::set<Block>> as_partition(const ResolvableDesign& d) {
  std::set<std::set<Block>> out;
  for (const auto& cls : d.classes) out.insert({cls.begin(), cls.end()});
  return out;
}

TEST(FindResolution, Example6UniqueUpToClassOrder) {
  auto ex6 = builtin("example6");
  std::vector<Block> blocks;
  for (const auto& cls : ex6.classes) {
    blocks.insert(blocks.end(), cls.begin(), cls.end());
  }
  SplitMix64 rng(11);
  testing::shuffle(blocks, rng);
  auto oracle = all_resolutions(9, blocks);
  ASSERT_EQ(oracle.size(), 1u);
  auto found = find_resolution(9, blocks);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->r(), 4u);
  EXPECT_EQ(as_partition(*found), *oracle.begin());
}

TEST(FindResolution, ShuffledBlocksProperty) {
  SplitMix64 rng(3);
  for (const auto& d : property_corpus()) {
    if (d.b() > kMaxResolutionBlocks) continue;
    std::vector<Block> blocks;
    for (const auto& cls : d.classes) {
      blocks.insert(blocks.end(), cls.begin(), cls.end());
    }
    for (int trial = 0; trial < 3; ++trial) {
      testing::shuffle(blocks, rng);
      auto found = find_resolution(d.v, blocks);
      ASSERT_TRUE(found.has_value());
      EXPECT_TRUE(validate(*found).ok());
      EXPECT_EQ(found->b(), d.b());
      EXPECT_EQ(found->r(), d.r());
    }
  }
}

TEST(Relabel, ArbitraryLabels) {
  std::vector<std::vector<std::vector<std::int64_t>>> classes{
      {{10, 20}, {30, 40}}, {{10, 30}, {20, 40}}, {{10, 40}, {20, 30}}};
  auto relabeled = relabel_points(classes);
  EXPECT_EQ(relabeled.design, builtin("example1"));
  EXPECT_EQ(relabeled.original_labels,
            (std::vector<std::int64_t>{10, 20, 30, 40}));
}

}  // namespace
}  // namespace crd

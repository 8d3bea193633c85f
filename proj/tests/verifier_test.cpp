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


#include "crd/verifier.hpp"

#include <cstring>
#include <set>
#include <vector>

#include <gtest/gtest.h>
#include "json.hpp"

#include "crd/affine.hpp"
#include "crd/builtin.hpp"
#include "crd/combinatorics.hpp"
#include "crd/delivery.hpp"
#include "crd/rng.hpp"
#include "test_support.hpp"

namespace crd {
namespace {

TEST(SplitMix64, ReferenceOutputs) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xE220A8397B1DCDAFULL);
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
  EXPECT_EQ(rng.next(), 4593380528125082431ULL);
  EXPECT_EQ(rng.next(), 16408922859458223821ULL);
}

TEST(FileStore, LayoutAndDeterminism) {
  FileStore a(3, 5, 12, 99);
  FileStore b(3, 5, 12, 99);
  FileStore other(3, 5, 12, 100);
  bool differs = false;
  for (std::uint32_t f = 1; f <= 3; ++f) {
    for (Point p = 1; p <= 5; ++p) {
      auto x = a.subfile(f, p);
      auto y = b.subfile(f, p);
      ASSERT_EQ(x.size(), 12u);
      EXPECT_TRUE(std::equal(x.begin(), x.end(), y.begin()));
      auto w = other.subfile(f, p);
      differs = differs || !std::equal(x.begin(), x.end(), w.begin());
    }
  }
  EXPECT_TRUE(differs);
  // Little-endian bytes of successive outputs, file-major.
  SplitMix64 rng(99);
  std::vector<std::uint8_t> stream;
  while (stream.size() < 3 * 5 * 12) {
    std::uint64_t word = rng.next();
    for (int i = 0; i < 8; ++i) stream.push_back(static_cast<std::uint8_t>(word >> (8 * i)));
  }
  auto sub = a.subfile(2, 4);
  const std::size_t offset = ((2 - 1) * 5 + (4 - 1)) * 12;
  EXPECT_EQ(std::memcmp(sub.data(), stream.data() + offset, 12), 0);
}

TEST(FileStore, Guards) {
  EXPECT_THROW(FileStore(1, 4, 0, 1), std::invalid_argument);
  FileStore store(2, 4, 8, 1);
  EXPECT_THROW(store.subfile(3, 1), std::out_of_range);
  EXPECT_THROW(store.subfile(1, 0), std::out_of_range);
}

TEST(DecodeUser, Example7U1) {
  auto c = configure(builtin("example7"), 2, 2);
  auto users = enumerate_users(c);
  auto demands = sequential_demands(users.size());
  auto schedule = generate_transmissions(c, demands);
  auto placement = place(c, demands.file_count);
  auto result = decode_user(c, users[0], demands, schedule, placement);
  EXPECT_EQ(result.recovered, (std::vector<Point>{9, 18, 27}));
  ASSERT_EQ(result.trace.size(), 3u);
  EXPECT_EQ(result.trace[0].transmission, 0u);
  EXPECT_EQ(result.trace[0].subfile, 9u);
}

TEST(DecodeUser, Example8U1) {
  auto c = configure(builtin("example8"), 2, 2);
  auto users = enumerate_users(c);
  auto demands = sequential_demands(users.size());
  auto schedule = generate_transmissions(c, demands);
  auto placement = place(c, demands.file_count);
  auto store = FileStore(demands.file_count, c.v(), 16, 3);
  auto payloads = encode_broadcast(schedule, store);
  ByteChannel channel{&store, payloads};
  auto result = decode_user(c, users[0], demands, schedule, placement, &channel);
  ASSERT_FALSE(result.trace.empty());
  EXPECT_EQ(result.trace[0].transmission, 0u);
  EXPECT_EQ(result.trace[0].subfile, 11u);
  EXPECT_EQ(result.recovered, (std::vector<Point>{11, 12, 15, 16}));
  ASSERT_EQ(result.payloads.size(), result.trace.size());
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    auto original = store.subfile(1, result.trace[i].subfile);
    EXPECT_TRUE(std::equal(original.begin(), original.end(),
                           result.payloads[i].begin()));
  }
}

TEST(DecodeUser, FullAccessRecoversNothing) {
  auto c = configure(builtin("example7"), 2, 3);
  auto users = enumerate_users(c);
  auto demands = sequential_demands(users.size());
  auto schedule = generate_transmissions(c, demands);
  auto result =
      decode_user(c, users[0], demands, schedule, place(c, demands.file_count));
  EXPECT_TRUE(result.recovered.empty());
}

TEST(DecodeUser, CorruptedScheduleIsDetected) {
  auto c = configure(builtin("example7"), 2, 2);
  auto users = enumerate_users(c);
  auto demands = sequential_demands(users.size());
  auto schedule = generate_transmissions(c, demands);
  auto placement = place(c, demands.file_count);
  // U2's term now names a subfile U1 cannot see.
  schedule[0].terms[1].subfile = 18;
  EXPECT_THROW(decode_user(c, users[0], demands, schedule, placement),
               DecodeError);
}

TEST(VerifyScheme, Example7BytesAndSymbolic) {
  auto c = configure(builtin("example7"), 2, 2);
  auto demands = sequential_demands(27);
  auto symbolic = verify_scheme(c, demands, {DecodeMode::kSymbolic, 0, 64});
  auto bytes = verify_scheme(c, demands, {DecodeMode::kBytes, 17, 64});
  EXPECT_TRUE(symbolic.pass);
  EXPECT_TRUE(bytes.pass);
  EXPECT_TRUE(symbolic.violations.empty());
  EXPECT_EQ(bytes.users_decoded, 27u);
  EXPECT_EQ(bytes.transmissions, 9u);
  ASSERT_EQ(symbolic.users.size(), bytes.users.size());
  for (std::size_t i = 0; i < bytes.users.size(); ++i) {
    EXPECT_EQ(symbolic.users[i].recovered, bytes.users[i].recovered);
    EXPECT_TRUE(bytes.users[i].bytes_ok);
    EXPECT_TRUE(bytes.users[i].missing.empty());
  }
}

TEST(VerifyScheme, Example8Bytes) {
  auto c = configure(builtin("example8"), 2, 2);
  auto report = verify_scheme(c, sequential_demands(108), {DecodeMode::kBytes, 1, 64});
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.transmissions, 48u);
  EXPECT_EQ(report.users_decoded, 108u);
}

TEST(VerifyScheme, AllEqualDemands) {
  auto c = configure(builtin("example7"), 2, 2);
  DemandVector same{1, std::vector<std::uint32_t>(27, 1)};
  EXPECT_TRUE(verify_scheme(c, same, {DecodeMode::kBytes, 5, 8}).pass);
}

TEST(VerifyScheme, ReportJson) {
  auto c = configure(builtin("example7"), 2, 2);
  auto report = verify_scheme(c, sequential_demands(27), {DecodeMode::kBytes, 9, 4});
  auto doc = nlohmann::json::parse(report.to_json());
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_EQ(doc["mode"], "bytes");
  EXPECT_EQ(doc["per_user"].size(), 27u);
}

TEST(Oracle, AgreesOnPublishedConfigs) {
  struct Item {
    ResolvableDesign design;
    std::uint32_t t;
    std::size_t users;
  };
  for (const auto& item : std::vector<Item>{{builtin("example7"), 2, 27},
                                            {builtin("example8"), 2, 108},
                                            {affine_resolvable({2, 2}), 1, 12}}) {
    auto c = configure(item.design, 2, item.t);
    auto demands = sequential_demands(item.users);
    auto oracle = brute_force_oracle(c, demands);
    ASSERT_EQ(oracle.recovered.size(), item.users);
    EXPECT_TRUE(oracle.all_cover);
    auto report = verify_scheme(c, demands);
    EXPECT_TRUE(oracle_agrees(oracle, report));
  }
}

TEST(Oracle, DetectsDisagreement) {
  auto c = configure(builtin("example7"), 2, 2);
  auto demands = sequential_demands(27);
  auto oracle = brute_force_oracle(c, demands);
  auto report = verify_scheme(c, demands);
  report.users[3].recovered.pop_back();
  EXPECT_FALSE(oracle_agrees(oracle, report));
}

TEST(Oracle, SizeGuard) {
  auto c = configure(affine_resolvable({5, 2}), 2, 2);
  auto demands = sequential_demands(1500);
  EXPECT_THROW(brute_force_oracle(c, demands, {200, 64}), std::length_error);
  auto big = configure(affine_resolvable({3, 4}), 2, 1);
  EXPECT_THROW(
      brute_force_oracle(big, sequential_demands(std::size_t(
                                  big.user_count()))),
      std::length_error);
}

TEST(Properties, RecoveredSetsAcrossConfigs) {
  struct Item {
    ResolvableDesign design;
    std::uint32_t z;
  };
  std::vector<Item> items{{builtin("example3"), 2}, {builtin("example4"), 2},
                          {builtin("example4"), 3}, {builtin("example6"), 2},
                          {builtin("example7"), 2}, {builtin("example7"), 3},
                          {builtin("example8"), 2}, {affine_resolvable({2, 3}), 2},
                          {affine_resolvable({4, 2}), 2}};
  std::uint64_t seed = 1;
  for (const auto& item : items) {
    for (std::uint32_t t = 1; t <= item.design.blocks_per_class(); ++t) {
      auto c = configure(item.design, item.z, t);
      auto users = enumerate_users(c);
      auto demands = random_demands(users.size(), 4, seed++);
      auto symbolic = verify_scheme(c, demands, {DecodeMode::kSymbolic, 0, 64});
      auto bytes = verify_scheme(c, demands, {DecodeMode::kBytes, seed, 16});
      ASSERT_TRUE(symbolic.pass);
      ASSERT_TRUE(bytes.pass);
      const std::size_t expected =
          c.mu_z() * checked_pow(c.blocks_per_class() - t, item.z);
      for (std::size_t m = 0; m < users.size(); ++m) {
        const auto& rec = bytes.users[m].recovered;
        ASSERT_EQ(rec, symbolic.users[m].recovered);
        ASSERT_EQ(rec.size(), expected);
        auto y = accessible_set(c, users[m]);
        PointSet all = y;
        for (Point p : rec) {
          ASSERT_FALSE(y.test(p - 1));
          all.set(p - 1);
        }
        ASSERT_TRUE(all.all());
      }
    }
  }
}

}  // namespace
}  // namespace crd

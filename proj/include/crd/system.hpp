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


#ifndef CRD_SYSTEM_HPP_
#define CRD_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crd/design.hpp"
#include "crd/numeric.hpp"

namespace crd {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A user reads t blocks (caches) from each of z parallel classes.
// Indices are 0-based: `classes` is an ascending z-subset of 0..r-1 and
// blocks[s] is an ascending t-subset of 0..b_r-1 within classes[s].
struct User {
  std::vector<std::uint32_t> classes;
  std::vector<std::vector<std::uint32_t>> blocks;

  friend bool operator==(const User&, const User&) = default;
};

// Position of a user in the canonical enumeration (0-based; printed 1-based).
using UserId = std::size_t;

// Immutable coded caching instance built from a design and (z, t).
class SystemConfig {
 public:
  const ResolvableDesign& design() const { return design_; }
  const CrdProfile& profile() const { return profile_; }

  std::uint32_t z() const { return z_; }
  std::uint32_t t() const { return t_; }
  std::uint32_t v() const { return design_.v; }
  std::uint32_t k() const { return static_cast<std::uint32_t>(design_.k()); }
  std::uint32_t r() const { return static_cast<std::uint32_t>(design_.r()); }
  std::uint32_t blocks_per_class() const {
    return static_cast<std::uint32_t>(design_.blocks_per_class());
  }
  std::uint32_t b() const { return static_cast<std::uint32_t>(design_.b()); }

  // mu_1 = k; mu_s for 2 <= s <= z is guaranteed present by configure().
  std::uint32_t mu(std::size_t s) const;
  std::uint32_t mu_z() const { return mu(z_); }

  // K = C(r, z) * C(b_r, t)^z.
  const BigInt& user_count() const { return user_count_; }
  // M/N = k / v.
  Rational cache_fraction() const { return Rational(k(), v()); }
  // F = v.
  std::uint32_t subpacketization() const { return v(); }

  const PointSet& block_set(std::uint32_t cls, std::uint32_t blk) const {
    return block_sets_[cls][blk];
  }
  // Global 0-based cache index j of block blk in class cls.
  std::uint32_t cache_index(std::uint32_t cls, std::uint32_t blk) const {
    return cls * blocks_per_class() + blk;
  }

 private:
  friend SystemConfig configure(ResolvableDesign design, std::uint32_t z,
                                std::uint32_t t);
  SystemConfig() = default;

  ResolvableDesign design_;
  CrdProfile profile_;
  std::uint32_t z_ = 0;
  std::uint32_t t_ = 0;
  BigInt user_count_;
  std::vector<std::vector<PointSet>> block_sets_;
};

// Throws ConfigError when the design is invalid, z is outside 2..r, mu_z is
// missing, t is outside 1..b_r, or some mu_s (s < z) is missing.
SystemConfig configure(ResolvableDesign design, std::uint32_t z,
                       std::uint32_t t);

inline constexpr std::uint64_t kMaxEnumeratedUsers = 10'000'000;

// Lexicographic over (classes, blocks tuple); throws std::length_error when
// K exceeds kMaxEnumeratedUsers.
std::vector<User> enumerate_users(const SystemConfig& config);

// Inverse of enumerate_users. Throws std::invalid_argument for a user that
// does not belong to this configuration.
UserId user_index(const SystemConfig& config, const User& user);

// Y_m: union of the user's tz blocks.
PointSet accessible_set(const SystemConfig& config, const User& user);

// Closed form zt M/N + sum_{s=2..z} (-1)^(s+1) t^s C(z,s) mu_s / v.
Rational memory_fraction(const SystemConfig& config);

// Symmetric batch prefetching: cache j holds subfiles A_j of every file.
struct CachePlacement {
  std::uint32_t file_count = 0;
  std::vector<Block> caches;  // caches[j] = Z_j as subfile indices
};

// Throws std::invalid_argument for file_count < 1.
CachePlacement place(const SystemConfig& config, std::uint32_t file_count);

// "C_{i,j}" with 1-based class and block numbers.
std::string cache_name(std::uint32_t cls, std::uint32_t blk);
std::string describe_user(const User& user);

}  // namespace crd

#endif  // CRD_SYSTEM_HPP_

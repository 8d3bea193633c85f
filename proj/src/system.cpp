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


#include "crd/system.hpp"

#include <sstream>

#include "crd/combinatorics.hpp"

namespace crd {

std::uint32_t SystemConfig::mu(std::size_t s) const {
  if (s == 1) return k();
  const auto value = profile_.mu_at(s);
  if (!value) {
    throw ConfigError("mu_" + std::to_string(s) + " does not exist");
  }
  return *value;
}

SystemConfig configure(ResolvableDesign design, std::uint32_t z,
                       std::uint32_t t) {
  const ValidationReport report = validate(design);
  if (!report.ok()) {
    throw ConfigError("invalid design: " + report.summary());
  }
  const auto r = static_cast<std::uint32_t>(design.r());
  const auto per_class = static_cast<std::uint32_t>(design.blocks_per_class());
  if (z < 2 || z > r) {
    throw ConfigError("z=" + std::to_string(z) + " outside 2.." +
                      std::to_string(r));
  }
  SystemConfig config;
  config.profile_ = crd_profile(design);
  if (!config.profile_.mu_at(z)) {
    throw ConfigError("mu_" + std::to_string(z) +
                      " does not exist for this design, so z=" +
                      std::to_string(z) + " is not admissible");
  }
  if (t < 1 || t > per_class) {
    throw ConfigError("t=" + std::to_string(t) + " outside 1.." +
                      std::to_string(per_class));
  }
  for (std::uint32_t s = 2; s < z; ++s) {
    if (!config.profile_.mu_at(s)) {
      throw ConfigError("mu_" + std::to_string(s) +
                        " does not exist; the accessible-memory formula needs "
                        "every mu_s with s <= z");
    }
  }
  config.z_ = z;
  config.t_ = t;
  config.user_count_ =
      big_binomial(r, z) * big_pow(big_binomial(per_class, t), z);
  for (const auto& cls : design.classes) {
    auto& row = config.block_sets_.emplace_back();
    for (const auto& block : cls) row.push_back(to_point_set(block, design.v));
  }
  config.design_ = std::move(design);
  return config;
}

std::vector<User> enumerate_users(const SystemConfig& config) {
  if (config.user_count() > kMaxEnumeratedUsers) {
    throw std::length_error("K=" + config.user_count().str() +
                            " users is too many to enumerate");
  }
  const std::uint32_t z = config.z();
  const auto subsets = combinations(config.blocks_per_class(), config.t());
  std::vector<User> users;
  users.reserve(static_cast<std::size_t>(config.user_count()));
  for (const auto& classes : combinations(config.r(), z)) {
    // Odometer over the z per-class subset choices, first class most
    // significant.
    std::vector<std::size_t> digit(z, 0);
    for (;;) {
      User user;
      user.classes = classes;
      for (std::uint32_t s = 0; s < z; ++s) {
        user.blocks.push_back(subsets[digit[s]]);
      }
      users.push_back(std::move(user));
      std::size_t pos = z;
      while (pos > 0 && ++digit[pos - 1] == subsets.size()) {
        digit[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return users;
}

UserId user_index(const SystemConfig& config, const User& user) {
  const std::uint32_t z = config.z();
  const std::uint32_t t = config.t();
  const std::uint32_t per_class = config.blocks_per_class();
  auto strictly_increasing = [](const std::vector<std::uint32_t>& xs,
                                std::uint32_t bound) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] >= bound || (i && xs[i] <= xs[i - 1])) return false;
    }
    return true;
  };
  bool ok = user.classes.size() == z && user.blocks.size() == z &&
            strictly_increasing(user.classes, config.r());
  for (std::size_t s = 0; ok && s < z; ++s) {
    ok = user.blocks[s].size() == t &&
         strictly_increasing(user.blocks[s], per_class);
  }
  if (!ok) {
    throw std::invalid_argument("user " + describe_user(user) +
                                " does not belong to this configuration");
  }
  const std::uint64_t radix = binomial(per_class, t);
  std::uint64_t index = combination_rank(user.classes, config.r());
  for (std::uint32_t s = 0; s < z; ++s) {
    index = index * radix + combination_rank(user.blocks[s], per_class);
  }
  return static_cast<UserId>(index);
}

PointSet accessible_set(const SystemConfig& config, const User& user) {
  (void)user_index(config, user);
  PointSet set(config.v());
  for (std::size_t s = 0; s < user.classes.size(); ++s) {
    for (std::uint32_t blk : user.blocks[s]) {
      set |= config.block_set(user.classes[s], blk);
    }
  }
  return set;
}

Rational memory_fraction(const SystemConfig& config) {
  const std::uint32_t z = config.z();
  const std::uint32_t t = config.t();
  Rational value = Rational(BigInt(z) * t * config.k(), config.v());
  for (std::uint32_t s = 2; s <= z; ++s) {
    Rational term(big_pow(t, s) * big_binomial(z, s) * config.mu(s),
                  config.v());
    if (s % 2 == 1) {
      value += term;
    } else {
      value -= term;
    }
  }
  return value;
}

CachePlacement place(const SystemConfig& config, std::uint32_t file_count) {
  if (file_count < 1) {
    throw std::invalid_argument("placement needs at least one file");
  }
  CachePlacement placement;
  placement.file_count = file_count;
  for (const auto& cls : config.design().classes) {
    for (const auto& block : cls) placement.caches.push_back(block);
  }
  return placement;
}

std::string cache_name(std::uint32_t cls, std::uint32_t blk) {
  return "C_{" + std::to_string(cls + 1) + "," + std::to_string(blk + 1) + "}";
}

std::string describe_user(const User& user) {
  std::ostringstream os;
  os << "U{";
  bool first = true;
  for (std::size_t s = 0; s < user.classes.size() && s < user.blocks.size();
       ++s) {
    for (std::uint32_t blk : user.blocks[s]) {
      os << (first ? "" : ",") << cache_name(user.classes[s], blk);
      first = false;
    }
  }
  os << "}";
  return os.str();
}

}  // namespace crd

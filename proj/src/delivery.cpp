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


#include "crd/delivery.hpp"

#include <algorithm>
#include <sstream>

#include "crd/combinatorics.hpp"
#include "crd/rng.hpp"

namespace crd {

namespace {

// Cartesian product of per-position choices, first position most
// significant.
template <typename Fn>
void for_each_product(const std::vector<std::size_t>& radices, Fn&& fn) {
  for (std::size_t r : radices) {
    if (r == 0) return;
  }
  std::vector<std::size_t> digit(radices.size(), 0);
  for (;;) {
    fn(digit);
    std::size_t pos = radices.size();
    while (pos > 0 && ++digit[pos - 1] == radices[pos - 1]) {
      digit[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return;
  }
}

std::vector<std::vector<std::uint32_t>> t_subsets_of(
    const std::vector<std::uint32_t>& superset, std::uint32_t t) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& pick :
       combinations(static_cast<std::uint32_t>(superset.size()), t)) {
    std::vector<std::uint32_t> subset;
    for (std::uint32_t i : pick) subset.push_back(superset[i]);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace

std::vector<User> group_members(const SystemConfig& config,
                                const Group& group) {
  const std::uint32_t z = config.z();
  std::vector<std::vector<std::vector<std::uint32_t>>> choices;
  std::vector<std::size_t> radices;
  for (std::uint32_t s = 0; s < z; ++s) {
    choices.push_back(t_subsets_of(group.blocks[s], config.t()));
    radices.push_back(choices.back().size());
  }
  std::vector<User> members;
  for_each_product(radices, [&](const std::vector<std::size_t>& digit) {
    User user;
    user.classes = group.classes;
    for (std::uint32_t s = 0; s < z; ++s) {
      user.blocks.push_back(choices[s][digit[s]]);
    }
    members.push_back(std::move(user));
  });
  return members;
}

std::vector<Group> enumerate_groups(const SystemConfig& config) {
  const std::uint32_t z = config.z();
  const std::uint32_t per_class = config.blocks_per_class();
  std::vector<Group> groups;
  if (config.t() + 1 > per_class) return groups;

  const BigInt count = big_binomial(config.r(), z) *
                       big_pow(big_binomial(per_class, config.t() + 1), z);
  if (count > kMaxEnumeratedGroups) {
    throw std::length_error(count.str() + " groups is too many to enumerate");
  }
  const auto subsets = combinations(per_class, config.t() + 1);
  groups.reserve(static_cast<std::size_t>(count));
  for (const auto& classes : combinations(config.r(), z)) {
    for_each_product(std::vector<std::size_t>(z, subsets.size()),
                     [&](const std::vector<std::size_t>& digit) {
                       Group group;
                       group.id = groups.size();
                       group.classes = classes;
                       for (std::uint32_t s = 0; s < z; ++s) {
                         group.blocks.push_back(subsets[digit[s]]);
                       }
                       for (const auto& user : group_members(config, group)) {
                         group.members.push_back(user_index(config, user));
                       }
                       groups.push_back(std::move(group));
                     });
  }
  return groups;
}

std::vector<Point> f_set(const SystemConfig& config, const Group& group,
                         const User& user) {
  const std::uint32_t z = config.z();
  bool member = user.classes == group.classes && user.blocks.size() == z &&
                group.blocks.size() == z;
  std::vector<std::uint32_t> excluded;
  for (std::uint32_t s = 0; member && s < z; ++s) {
    const auto& mine = user.blocks[s];
    const auto& pool = group.blocks[s];
    member = mine.size() == config.t() && pool.size() == config.t() + 1 &&
             std::includes(pool.begin(), pool.end(), mine.begin(), mine.end());
    if (!member) break;
    std::vector<std::uint32_t> rest;
    std::set_difference(pool.begin(), pool.end(), mine.begin(), mine.end(),
                        std::back_inserter(rest));
    excluded.push_back(rest.front());
  }
  if (!member) {
    throw std::invalid_argument("user " + describe_user(user) +
                                " is not a member of group " +
                                std::to_string(group.id + 1));
  }
  PointSet acc = config.block_set(group.classes[0], excluded[0]);
  for (std::uint32_t s = 1; s < z; ++s) {
    acc &= config.block_set(group.classes[s], excluded[s]);
  }
  return to_points(acc);
}

DemandVector sequential_demands(std::size_t users) {
  DemandVector demands;
  demands.file_count = static_cast<std::uint32_t>(users);
  for (std::size_t m = 0; m < users; ++m) {
    demands.files.push_back(static_cast<std::uint32_t>(m + 1));
  }
  return demands;
}

DemandVector random_demands(std::size_t users, std::uint32_t file_count,
                            std::uint64_t seed) {
  if (file_count < 1) throw DemandError("need at least one file");
  SplitMix64 rng(seed);
  DemandVector demands;
  demands.file_count = file_count;
  for (std::size_t m = 0; m < users; ++m) {
    demands.files.push_back(
        static_cast<std::uint32_t>(1 + rng.next() % file_count));
  }
  return demands;
}

void check_demands(const SystemConfig& config, const DemandVector& demands) {
  if (demands.file_count < 1) throw DemandError("need at least one file");
  if (BigInt(demands.files.size()) != config.user_count()) {
    throw DemandError("demand vector has " +
                      std::to_string(demands.files.size()) +
                      " entries, expected K=" + config.user_count().str());
  }
  for (std::size_t m = 0; m < demands.files.size(); ++m) {
    const auto f = demands.files[m];
    if (f < 1 || f > demands.file_count) {
      throw DemandError("user " + std::to_string(m + 1) + " demands file " +
                        std::to_string(f) + " outside 1.." +
                        std::to_string(demands.file_count));
    }
  }
}

std::vector<Transmission> generate_transmissions(const SystemConfig& config,
                                                 const DemandVector& demands) {
  check_demands(config, demands);
  const std::uint32_t mu_z = config.mu_z();
  std::vector<Transmission> schedule;
  for (const Group& group : enumerate_groups(config)) {
    const auto members = group_members(config, group);
    std::vector<std::vector<Point>> f;
    f.reserve(members.size());
    for (const auto& user : members) f.push_back(f_set(config, group, user));
    for (std::uint32_t s = 1; s <= mu_z; ++s) {
      Transmission tx;
      tx.id = schedule.size();
      tx.group = group.id;
      tx.s = s;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const UserId user = group.members[i];
        tx.terms.push_back({user, demands.files[user], f[i][s - 1]});
      }
      schedule.push_back(std::move(tx));
    }
  }
  return schedule;
}

std::string schedule_csv(std::span<const Transmission> schedule) {
  std::ostringstream os;
  os << "group,s,user,file,subfile\n";
  for (const auto& tx : schedule) {
    for (const auto& term : tx.terms) {
      os << tx.group + 1 << "," << tx.s << "," << term.user + 1 << ","
         << term.file << "," << term.subfile << "\n";
    }
  }
  return os.str();
}

std::string schedule_jsonl(std::span<const Transmission> schedule) {
  std::ostringstream os;
  for (const auto& tx : schedule) {
    os << "{\"id\":" << tx.id + 1 << ",\"group\":" << tx.group + 1
       << ",\"s\":" << tx.s << ",\"terms\":[";
    for (std::size_t i = 0; i < tx.terms.size(); ++i) {
      const auto& term = tx.terms[i];
      os << (i ? "," : "") << "{\"user\":" << term.user + 1
         << ",\"file\":" << term.file << ",\"subfile\":" << term.subfile
         << "}";
    }
    os << "]}\n";
  }
  return os.str();
}

}  // namespace crd

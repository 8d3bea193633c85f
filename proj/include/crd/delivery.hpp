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


#ifndef CRD_DELIVERY_HPP_
#define CRD_DELIVERY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crd/system.hpp"

namespace crd {

// z classes with t+1 blocks chosen from each. The members are the (t+1)^z
// users that read t of those t+1 blocks in every chosen class.
struct Group {
  std::size_t id = 0;  // enumeration position, 0-based
  std::vector<std::uint32_t> classes;
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<UserId> members;  // canonical user order
};

inline constexpr std::uint64_t kMaxEnumeratedGroups = 10'000'000;

// C(r,z) * C(b_r,t+1)^z groups, lexicographic over (classes, blocks).
// Empty when t = b_r.
std::vector<Group> enumerate_groups(const SystemConfig& config);

std::vector<User> group_members(const SystemConfig& config, const Group& group);

// f_m: intersection over the chosen classes of the one block of the group
// that `user` does not read. Sorted ascending; has mu_z elements.
// Throws std::invalid_argument when `user` is not a member of `group`.
std::vector<Point> f_set(const SystemConfig& config, const Group& group,
                         const User& user);

class DemandError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// files[m] in 1..file_count is the file demanded by user m. Repeats are
// allowed.
struct DemandVector {
  std::uint32_t file_count = 0;
  std::vector<std::uint32_t> files;
};

// User m demands file m + 1, with N = users.
DemandVector sequential_demands(std::size_t users);
// files[m] = 1 + next() % file_count for successive SplitMix64 outputs.
DemandVector random_demands(std::size_t users, std::uint32_t file_count,
                            std::uint64_t seed);
void check_demands(const SystemConfig& config, const DemandVector& demands);

struct Term {
  UserId user = 0;
  std::uint32_t file = 0;
  Point subfile = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// One XOR-coded broadcast: the XOR of W_{file, subfile} over all terms.
struct Transmission {
  std::size_t id = 0;     // 0-based schedule position
  std::size_t group = 0;  // 0-based group id
  std::uint32_t s = 0;    // 1..mu_z
  std::vector<Term> terms;
};

// For every group in order, mu_z transmissions; transmission s combines the
// s-th smallest element of each member's f_m. Throws DemandError for a demand
// vector of the wrong length or with out-of-range files.
std::vector<Transmission> generate_transmissions(const SystemConfig& config,
                                                 const DemandVector& demands);

// Exports; ids, users and files are printed 1-based.
// CSV: header "group,s,user,file,subfile", one row per term.
std::string schedule_csv(std::span<const Transmission> schedule);
// One JSON object per line:
// {"id":1,"group":1,"s":1,"terms":[{"user":1,"file":1,"subfile":9},...]}
std::string schedule_jsonl(std::span<const Transmission> schedule);

}  // namespace crd

#endif  // CRD_DELIVERY_HPP_

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


#ifndef CRD_VERIFIER_HPP_
#define CRD_VERIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crd/delivery.hpp"
#include "crd/system.hpp"

namespace crd {

// N files of v subfiles, each subfile_len bytes, filled from one SplitMix64
// stream: successive outputs are split into little-endian bytes and laid out
// file by file, subfile by subfile. Same (seed, N, v, len) gives the same
// bytes.
class FileStore {
 public:
  FileStore(std::uint32_t file_count, std::uint32_t subfiles,
            std::size_t subfile_len, std::uint64_t seed);

  // 1-based file and subfile index.
  std::span<const std::uint8_t> subfile(std::uint32_t file,
                                        Point index) const;

  std::uint32_t file_count() const { return file_count_; }
  std::uint32_t subfiles() const { return subfiles_; }
  std::size_t subfile_len() const { return subfile_len_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint32_t file_count_;
  std::uint32_t subfiles_;
  std::size_t subfile_len_;
  std::uint64_t seed_;
  std::vector<std::uint8_t> bytes_;
};

using Payload = std::vector<std::uint8_t>;

// payloads[i] is the XOR of every subfile named by schedule[i].
std::vector<Payload> encode_broadcast(std::span<const Transmission> schedule,
                                      const FileStore& store);

// Raised when a transmission cannot be decoded by one of its users, which
// means the schedule is wrong.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DecodeMode { kSymbolic, kBytes };
const char* to_string(DecodeMode mode);

struct TraceEntry {
  std::size_t transmission = 0;
  Point subfile = 0;
};

struct UserDecode {
  std::vector<Point> recovered;   // ascending
  std::vector<TraceEntry> trace;  // schedule order
  std::vector<Payload> payloads;  // bytes mode only, parallel to trace
};

// In bytes mode the decoder XORs the broadcast payload with the other terms'
// subfiles, which it may only read from the caches in its own H.
struct ByteChannel {
  const FileStore* store = nullptr;
  std::span<const Payload> payloads;
};

// Decodes every transmission that carries a term for `user`. Throws
// DecodeError when another term names a subfile outside the user's caches
// or the user's own term is missing or wrong.
UserDecode decode_user(const SystemConfig& config, const User& user,
                       const DemandVector& demands,
                       std::span<const Transmission> schedule,
                       const CachePlacement& placement,
                       const ByteChannel* bytes = nullptr);

struct UserReport {
  UserId user = 0;
  std::uint32_t file = 0;
  std::vector<Point> recovered;
  std::vector<Point> missing;
  std::vector<TraceEntry> trace;
  bool bytes_ok = true;
  std::string error;
};

struct DecodeReport {
  DecodeMode mode = DecodeMode::kSymbolic;
  std::uint64_t seed = 0;
  std::size_t subfile_len = 0;
  std::size_t transmissions = 0;
  std::size_t users_decoded = 0;
  std::vector<UserReport> users;
  std::vector<std::string> violations;
  bool pass = false;

  std::string to_json() const;
};

struct VerifyOptions {
  DecodeMode mode = DecodeMode::kSymbolic;
  std::uint64_t seed = 0;
  std::size_t subfile_len = 64;
};

// Places, delivers and decodes for all K users. Along the way checks, for
// every group and member, |f_m| = mu_z, f_m disjoint from Y_m, f_m inside
// every other member's Y, and f_m equal to the intersection of the other
// members' Y. Failures are recorded in the report; pass means every user
// holds all v subfiles of its file (bit-exact in bytes mode) and no check
// failed.
DecodeReport verify_scheme(const SystemConfig& config,
                           const DemandVector& demands,
                           const VerifyOptions& options = {});

// Independent check by plain std::set algebra on the raw blocks. For every
// user, unions over each group containing it the intersection of the other
// members' accessible sets, and compares that with the complement of Y_m.
struct OracleLimits {
  std::uint64_t max_users = 2000;
  std::uint32_t max_points = 64;
};
struct OracleResult {
  std::vector<std::vector<Point>> recovered;  // per user, ascending
  std::vector<bool> covers_complement;        // recovered == X \ Y_m
  bool all_cover = false;
};
// Throws std::length_error beyond `limits`.
OracleResult brute_force_oracle(const SystemConfig& config,
                                const DemandVector& demands,
                                const OracleLimits& limits = {});
bool oracle_agrees(const OracleResult& oracle, const DecodeReport& report);

}  // namespace crd

#endif  // CRD_VERIFIER_HPP_

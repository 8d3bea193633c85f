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


#ifndef CRD_METRICS_HPP_
#define CRD_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crd/numeric.hpp"
#include "crd/system.hpp"

namespace crd {

// The design numbers the closed forms consume; mu maps s -> mu_s.
struct CrdParameters {
  BigInt v;
  BigInt k;
  BigInt r;
  BigInt blocks_per_class;
  std::map<std::uint32_t, BigInt> mu;
};

CrdParameters parameters_of(const ResolvableDesign& design,
                            const CrdProfile& profile);

// AG(m, q) numbers straight from the formulas (no design is built), so q may
// be any prime power. Throws std::invalid_argument otherwise or for m < 2.
CrdParameters affine_parameters(std::uint64_t q, std::uint32_t m);

struct SchemeMetrics {
  Rational rate;             // R = mu_z C(b_r, t+1)^z C(r, z) / v
  BigInt users;              // K
  BigInt subpacketization;   // F = v
  BigInt gain;               // g = (t+1)^z
  Rational rate_per_user;    // R / K
  Rational cache_fraction;   // M/N = k / v
  Rational access_fraction;  // M'/N
  BigInt caches;             // b
  std::uint64_t caches_per_user = 0;  // t z
};

SchemeMetrics scheme_metrics(const SystemConfig& config);
// Throws std::invalid_argument when z or t is out of range or a needed mu_s
// is missing.
SchemeMetrics scheme_metrics(const CrdParameters& params, std::uint32_t z,
                             std::uint32_t t);

// Dedicated-cache baseline with K = b = q(q^m - 1)/(q - 1) users and
// M/N = 1/q.
struct ManMetrics {
  BigInt users;
  Rational cache_fraction;
  Rational rate;
  Rational rate_per_user;
  BigInt gain;
  BigInt subpacketization;
  BigInt caches;
};

ManMetrics man_metrics(std::uint64_t q, std::uint32_t m);

struct SweepSpec {
  std::vector<std::uint64_t> q;
  std::uint32_t m = 2;
  std::uint32_t z = 2;
  std::vector<std::uint32_t> t;
};

struct SweepRow {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::uint32_t z = 0;
  std::uint32_t t = 0;
  std::optional<SchemeMetrics> scheme;
  std::optional<ManMetrics> man;
  std::string error;  // non-empty for an inadmissible point

  bool ok() const { return error.empty(); }
};

// Rows ordered by q (as given), then t (as given). Affine designs with z = 2
// only; other points become error rows.
std::vector<SweepRow> sweep(const SweepSpec& spec);

inline constexpr const char* kSweepHeader =
    "q,m,z,t,M_over_N,Mprime_over_N,K,F,R,R_per_K,g,man_K,man_R,man_R_per_K,"
    "man_g,man_F";

// Rationals as 12-significant-digit decimals, or as a/b when `exact`.
// Error rows become "# error ..." comment lines.
std::string sweep_csv(std::span<const SweepRow> rows, bool exact = false);
// One line per row, every rational given exactly and as a decimal.
std::string sweep_kv(std::span<const SweepRow> rows);

// Side-by-side MaN / proposed table for one (q, m) and several t.
std::string comparison_table(std::uint64_t q, std::uint32_t m,
                             std::span<const std::uint32_t> ts);

}  // namespace crd

#endif  // CRD_METRICS_HPP_

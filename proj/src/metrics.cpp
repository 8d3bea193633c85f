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


#include "crd/metrics.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "crd/field.hpp"

namespace crd {

CrdParameters parameters_of(const ResolvableDesign& design,
                            const CrdProfile& profile) {
  CrdParameters params;
  params.v = design.v;
  params.k = design.k();
  params.r = design.r();
  params.blocks_per_class = design.blocks_per_class();
  for (const auto& [s, value] : profile.mu) {
    if (value) params.mu[static_cast<std::uint32_t>(s)] = *value;
  }
  return params;
}

CrdParameters affine_parameters(std::uint64_t q, std::uint32_t m) {
  if (!factor_prime_power(q).valid()) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  if (m < 2) {
    throw std::invalid_argument("affine dimension m must be >= 2");
  }
  CrdParameters params;
  params.v = big_pow(q, m);
  params.k = big_pow(q, m - 1);
  params.r = (params.v - 1) / (q - 1);
  params.blocks_per_class = q;
  params.mu[2] = big_pow(q, m - 2);
  return params;
}

SchemeMetrics scheme_metrics(const CrdParameters& params, std::uint32_t z,
                             std::uint32_t t) {
  if (z < 2 || BigInt(z) > params.r) {
    throw std::invalid_argument("z=" + std::to_string(z) + " out of range");
  }
  if (t < 1 || BigInt(t) > params.blocks_per_class) {
    throw std::invalid_argument("t=" + std::to_string(t) + " outside 1..b_r");
  }
  auto mu = [&](std::uint32_t s) -> BigInt {
    auto it = params.mu.find(s);
    if (it == params.mu.end()) {
      throw std::invalid_argument("mu_" + std::to_string(s) +
                                  " does not exist");
    }
    return it->second;
  };
  const BigInt mu_z = mu(z);

  SchemeMetrics out;
  out.users = big_binomial(params.r, z) *
              big_pow(big_binomial(params.blocks_per_class, t), z);
  out.rate = Rational(mu_z *
                          big_pow(big_binomial(params.blocks_per_class, t + 1),
                                  z) *
                          big_binomial(params.r, z),
                      params.v);
  out.subpacketization = params.v;
  out.gain = big_pow(t + 1, z);
  out.rate_per_user = out.rate / Rational(out.users);
  out.cache_fraction = Rational(params.k, params.v);
  out.access_fraction = Rational(BigInt(z) * t * params.k, params.v);
  for (std::uint32_t s = 2; s <= z; ++s) {
    const Rational term(big_pow(t, s) * big_binomial(z, s) * mu(s), params.v);
    if (s % 2 == 1) {
      out.access_fraction += term;
    } else {
      out.access_fraction -= term;
    }
  }
  out.caches = params.r * params.blocks_per_class;
  out.caches_per_user = std::uint64_t{t} * z;
  return out;
}

SchemeMetrics scheme_metrics(const SystemConfig& config) {
  SchemeMetrics out = scheme_metrics(
      parameters_of(config.design(), config.profile()), config.z(),
      config.t());
  out.access_fraction = memory_fraction(config);
  return out;
}

ManMetrics man_metrics(std::uint64_t q, std::uint32_t m) {
  if (!factor_prime_power(q).valid()) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  if (m < 2) {
    throw std::invalid_argument("affine dimension m must be >= 2");
  }
  const BigInt qm = big_pow(q, m);
  const BigInt r = (qm - 1) / (q - 1);
  ManMetrics out;
  out.users = BigInt(q) * r;
  out.caches = out.users;
  out.cache_fraction = Rational(1, q);
  out.rate = Rational((qm - 1) * (q - 1), qm + q - 2);
  out.rate_per_user =
      Rational(BigInt(q - 1) * (q - 1), BigInt(q) * (qm + q - 2));
  out.gain = r + 1;
  out.subpacketization = big_binomial(out.users, static_cast<std::uint64_t>(r));
  return out;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (std::uint64_t q : spec.q) {
    for (std::uint32_t t : spec.t) {
      SweepRow row;
      row.q = q;
      row.m = spec.m;
      row.z = spec.z;
      row.t = t;
      try {
        if (spec.z != 2) {
          throw std::invalid_argument(
              "affine designs only support z=2 (mu_3 does not exist)");
        }
        if (t < 1 || t > q) {
          throw std::invalid_argument("t=" + std::to_string(t) +
                                      " outside 1..q=" + std::to_string(q));
        }
        row.scheme = scheme_metrics(affine_parameters(q, spec.m), spec.z, t);
        row.man = man_metrics(q, spec.m);
      } catch (const std::invalid_argument& e) {
        row.scheme.reset();
        row.man.reset();
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows, bool exact) {
  auto fmt = [exact](const Rational& x) {
    return exact ? to_string(x) : to_decimal(x);
  };
  std::ostringstream os;
  os << kSweepHeader << "\n";
  for (const auto& row : rows) {
    if (!row.ok()) {
      os << "# error q=" << row.q << " m=" << row.m << " z=" << row.z
         << " t=" << row.t << ": " << row.error << "\n";
      continue;
    }
    const auto& s = *row.scheme;
    const auto& man = *row.man;
    os << row.q << "," << row.m << "," << row.z << "," << row.t << ","
       << fmt(s.cache_fraction) << "," << fmt(s.access_fraction) << ","
       << s.users << "," << s.subpacketization << "," << fmt(s.rate) << ","
       << fmt(s.rate_per_user) << "," << s.gain << "," << man.users << ","
       << fmt(man.rate) << "," << fmt(man.rate_per_user) << "," << man.gain
       << "," << man.subpacketization << "\n";
  }
  return os.str();
}

std::string sweep_kv(std::span<const SweepRow> rows) {
  std::ostringstream os;
  auto rational = [&os](const char* key, const Rational& x) {
    os << " " << key << "=" << to_string(x) << " " << key
       << "_decimal=" << to_decimal(x);
  };
  for (const auto& row : rows) {
    os << "q=" << row.q << " m=" << row.m << " z=" << row.z << " t=" << row.t;
    if (!row.ok()) {
      os << " error=\"" << row.error << "\"\n";
      continue;
    }
    const auto& s = *row.scheme;
    const auto& man = *row.man;
    rational("M_over_N", s.cache_fraction);
    rational("Mprime_over_N", s.access_fraction);
    os << " K=" << s.users << " F=" << s.subpacketization;
    rational("R", s.rate);
    rational("R_per_K", s.rate_per_user);
    os << " g=" << s.gain << " man_K=" << man.users;
    rational("man_R", man.rate);
    rational("man_R_per_K", man.rate_per_user);
    os << " man_g=" << man.gain << " man_F=" << man.subpacketization << "\n";
  }
  return os.str();
}

std::string comparison_table(std::uint64_t q, std::uint32_t m,
                             std::span<const std::uint32_t> ts) {
  const ManMetrics man = man_metrics(q, m);
  const CrdParameters params = affine_parameters(q, m);
  std::vector<std::string> header{"parameter", "MaN"};
  std::vector<SchemeMetrics> schemes;
  for (std::uint32_t t : ts) {
    if (t < 1 || t > q) {
      throw std::invalid_argument("t=" + std::to_string(t) + " outside 1..q");
    }
    schemes.push_back(scheme_metrics(params, 2, t));
    header.push_back("proposed t=" + std::to_string(t));
  }
  auto big = [](const BigInt& x) { return x.str(); };
  auto rat = [](const Rational& x) {
    return to_string(x) + " (" + to_decimal(x, 6) + ")";
  };
  std::vector<std::vector<std::string>> table{header};
  auto add = [&](const std::string& name, const std::string& man_cell,
                 auto&& cell) {
    std::vector<std::string> line{name, man_cell};
    for (const auto& s : schemes) line.push_back(cell(s));
    table.push_back(std::move(line));
  };
  add("caches", big(man.caches), [&](const SchemeMetrics& s) { return big(s.caches); });
  add("caches per user", "1",
      [](const SchemeMetrics& s) { return std::to_string(s.caches_per_user); });
  add("M/N", rat(man.cache_fraction),
      [&](const SchemeMetrics& s) { return rat(s.cache_fraction); });
  add("users K", big(man.users), [&](const SchemeMetrics& s) { return big(s.users); });
  add("subpacketization F", big(man.subpacketization),
      [&](const SchemeMetrics& s) { return big(s.subpacketization); });
  add("rate R", rat(man.rate), [&](const SchemeMetrics& s) { return rat(s.rate); });
  add("rate per user R/K", rat(man.rate_per_user),
      [&](const SchemeMetrics& s) { return rat(s.rate_per_user); });
  add("gain g", big(man.gain), [&](const SchemeMetrics& s) { return big(s.gain); });

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::ostringstream os;
  os << "q=" << q << " m=" << m << "\n";
  for (const auto& line : table) {
    for (std::size_t c = 0; c + 1 < line.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
    }
    os << line.back();
    os << "\n";
  }
  return os.str();
}

}  // namespace crd

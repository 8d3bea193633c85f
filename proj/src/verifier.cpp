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

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "crd/combinatorics.hpp"
#include "crd/rng.hpp"
#include "json.hpp"

namespace crd {

FileStore::FileStore(std::uint32_t file_count, std::uint32_t subfiles,
                     std::size_t subfile_len, std::uint64_t seed)
    : file_count_(file_count),
      subfiles_(subfiles),
      subfile_len_(subfile_len),
      seed_(seed) {
  if (file_count < 1 || subfiles < 1 || subfile_len < 1) {
    throw std::invalid_argument(
        "file store needs at least one file, subfile and byte");
  }
  const std::size_t total =
      static_cast<std::size_t>(file_count) * subfiles * subfile_len;
  bytes_.resize(total);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < total; i += 8) {
    std::uint64_t word = rng.next();
    for (std::size_t j = 0; j < 8 && i + j < total; ++j) {
      bytes_[i + j] = static_cast<std::uint8_t>(word & 0xFF);
      word >>= 8;
    }
  }
}

std::span<const std::uint8_t> FileStore::subfile(std::uint32_t file,
                                                 Point index) const {
  if (file < 1 || file > file_count_ || index < 1 || index > subfiles_) {
    throw std::out_of_range("no subfile W_{" + std::to_string(file) + "," +
                            std::to_string(index) + "}");
  }
  const std::size_t offset =
      ((static_cast<std::size_t>(file) - 1) * subfiles_ + (index - 1)) *
      subfile_len_;
  return {bytes_.data() + offset, subfile_len_};
}

std::vector<Payload> encode_broadcast(std::span<const Transmission> schedule,
                                      const FileStore& store) {
  std::vector<Payload> payloads;
  payloads.reserve(schedule.size());
  for (const auto& tx : schedule) {
    Payload payload(store.subfile_len(), 0);
    for (const auto& term : tx.terms) {
      const auto data = store.subfile(term.file, term.subfile);
      for (std::size_t i = 0; i < payload.size(); ++i) payload[i] ^= data[i];
    }
    payloads.push_back(std::move(payload));
  }
  return payloads;
}

const char* to_string(DecodeMode mode) {
  return mode == DecodeMode::kBytes ? "bytes" : "symbolic";
}

namespace {

// Caches in the user's H, as indices into CachePlacement::caches.
std::vector<std::uint32_t> user_caches(const SystemConfig& config,
                                       const User& user) {
  std::vector<std::uint32_t> caches;
  for (std::size_t s = 0; s < user.classes.size(); ++s) {
    for (std::uint32_t blk : user.blocks[s]) {
      caches.push_back(config.cache_index(user.classes[s], blk));
    }
  }
  return caches;
}

UserDecode decode_indexed(const SystemConfig& config, const User& user,
                          UserId id, const DemandVector& demands,
                          std::span<const Transmission> schedule,
                          std::span<const std::size_t> involved,
                          const CachePlacement& placement,
                          const ByteChannel* bytes) {
  const auto caches = user_caches(config, user);
  auto readable = [&](Point subfile) {
    return std::any_of(caches.begin(), caches.end(), [&](std::uint32_t j) {
      const auto& z = placement.caches.at(j);
      return std::binary_search(z.begin(), z.end(), subfile);
    });
  };

  UserDecode out;
  for (std::size_t index : involved) {
    const Transmission& tx = schedule[index];
    const Term* own = nullptr;
    for (const auto& term : tx.terms) {
      if (term.user != id) continue;
      if (own) {
        throw DecodeError("transmission " + std::to_string(tx.id + 1) +
                          " carries user " + std::to_string(id + 1) +
                          " twice");
      }
      own = &term;
    }
    if (!own) continue;
    if (own->file != demands.files[id]) {
      throw DecodeError("transmission " + std::to_string(tx.id + 1) +
                        " sends user " + std::to_string(id + 1) + " file " +
                        std::to_string(own->file) + " instead of " +
                        std::to_string(demands.files[id]));
    }
    Payload payload;
    if (bytes) payload = bytes->payloads[index];
    for (const auto& term : tx.terms) {
      if (&term == own) continue;
      if (!readable(term.subfile)) {
        throw DecodeError("transmission " + std::to_string(tx.id + 1) +
                          ": user " + std::to_string(id + 1) +
                          " cannot cancel W_{" + std::to_string(term.file) +
                          "," + std::to_string(term.subfile) +
                          "}, which is in none of its caches");
      }
      if (bytes) {
        const auto cached = bytes->store->subfile(term.file, term.subfile);
        for (std::size_t i = 0; i < payload.size(); ++i) payload[i] ^= cached[i];
      }
    }
    out.trace.push_back({index, own->subfile});
    out.recovered.push_back(own->subfile);
    if (bytes) out.payloads.push_back(std::move(payload));
  }
  std::sort(out.recovered.begin(), out.recovered.end());
  out.recovered.erase(std::unique(out.recovered.begin(), out.recovered.end()),
                      out.recovered.end());
  return out;
}

}  // namespace

UserDecode decode_user(const SystemConfig& config, const User& user,
                       const DemandVector& demands,
                       std::span<const Transmission> schedule,
                       const CachePlacement& placement,
                       const ByteChannel* bytes) {
  check_demands(config, demands);
  const UserId id = user_index(config, user);
  std::vector<std::size_t> involved;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& terms = schedule[i].terms;
    if (std::any_of(terms.begin(), terms.end(),
                    [&](const Term& term) { return term.user == id; })) {
      involved.push_back(i);
    }
  }
  return decode_indexed(config, user, id, demands, schedule, involved,
                        placement, bytes);
}

DecodeReport verify_scheme(const SystemConfig& config,
                           const DemandVector& demands,
                           const VerifyOptions& options) {
  check_demands(config, demands);
  DecodeReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  report.subfile_len = options.subfile_len;

  const CachePlacement placement = place(config, demands.file_count);
  const auto users = enumerate_users(config);
  std::vector<PointSet> accessible;
  accessible.reserve(users.size());
  for (const auto& user : users) {
    accessible.push_back(accessible_set(config, user));
  }

  for (const Group& group : enumerate_groups(config)) {
    const auto members = group_members(config, group);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const UserId m = group.members[i];
      const PointSet f = to_point_set(f_set(config, group, members[i]),
                                      config.v());
      const std::string where = "group " + std::to_string(group.id + 1) +
                                ", user " + std::to_string(m + 1);
      if (f.count() != config.mu_z()) {
        report.violations.push_back(where + ": |f_m| = " +
                                    std::to_string(f.count()) +
                                    ", expected mu_z");
      }
      if (f.intersects(accessible[m])) {
        report.violations.push_back(where + ": f_m overlaps Y_m");
      }
      PointSet others(config.v());
      others.set();
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j == i) continue;
        const PointSet& y = accessible[group.members[j]];
        if (!f.is_subset_of(y)) {
          report.violations.push_back(
              where + ": f_m not inside Y of user " +
              std::to_string(group.members[j] + 1));
        }
        others &= y;
      }
      if (others != f) {
        report.violations.push_back(
            where + ": f_m differs from the intersection of the other "
                    "members' accessible sets");
      }
    }
  }

  const auto schedule = generate_transmissions(config, demands);
  report.transmissions = schedule.size();
  std::vector<std::vector<std::size_t>> involved(users.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    for (const auto& term : schedule[i].terms) {
      if (involved[term.user].empty() || involved[term.user].back() != i) {
        involved[term.user].push_back(i);
      }
    }
  }

  std::optional<FileStore> store;
  std::vector<Payload> payloads;
  ByteChannel channel;
  if (options.mode == DecodeMode::kBytes) {
    store.emplace(demands.file_count, config.v(), options.subfile_len,
                  options.seed);
    payloads = encode_broadcast(schedule, *store);
    channel.store = &*store;
    channel.payloads = payloads;
  }

  for (UserId m = 0; m < users.size(); ++m) {
    UserReport entry;
    entry.user = m;
    entry.file = demands.files[m];
    try {
      UserDecode decoded = decode_indexed(
          config, users[m], m, demands, schedule, involved[m], placement,
          options.mode == DecodeMode::kBytes ? &channel : nullptr);
      entry.recovered = std::move(decoded.recovered);
      entry.trace = std::move(decoded.trace);
      if (options.mode == DecodeMode::kBytes) {
        for (std::size_t i = 0; i < entry.trace.size(); ++i) {
          const auto original =
              store->subfile(entry.file, entry.trace[i].subfile);
          if (!std::equal(original.begin(), original.end(),
                          decoded.payloads[i].begin(),
                          decoded.payloads[i].end())) {
            entry.bytes_ok = false;
          }
        }
      }
    } catch (const DecodeError& e) {
      entry.error = e.what();
    }
    PointSet have = accessible[m] | to_point_set(entry.recovered, config.v());
    have.flip();
    entry.missing = to_points(have);
    if (entry.error.empty() && entry.missing.empty() && entry.bytes_ok) {
      ++report.users_decoded;
    }
    report.users.push_back(std::move(entry));
  }
  report.pass =
      report.violations.empty() && report.users_decoded == users.size();
  return report;
}

std::string DecodeReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["mode"] = to_string(mode);
  doc["seed"] = seed;
  doc["subfile_len"] = subfile_len;
  doc["pass"] = pass;
  doc["users"] = users.size();
  doc["users_decoded"] = users_decoded;
  doc["transmissions"] = transmissions;
  doc["violations"] = violations;
  auto& list = doc["per_user"] = nlohmann::ordered_json::array();
  for (const auto& u : users) {
    nlohmann::ordered_json entry;
    entry["user"] = u.user + 1;
    entry["file"] = u.file;
    entry["recovered"] = u.recovered;
    entry["missing"] = u.missing;
    auto& trace = entry["trace"] = nlohmann::ordered_json::array();
    for (const auto& t : u.trace) {
      trace.push_back({t.transmission + 1, t.subfile});
    }
    entry["bytes_ok"] = u.bytes_ok;
    if (!u.error.empty()) entry["error"] = u.error;
    list.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

OracleResult brute_force_oracle(const SystemConfig& config,
                                const DemandVector& demands,
                                const OracleLimits& limits) {
  if (config.user_count() > limits.max_users || config.v() > limits.max_points) {
    throw std::length_error("brute-force oracle limited to K <= " +
                            std::to_string(limits.max_users) + " and v <= " +
                            std::to_string(limits.max_points));
  }
  check_demands(config, demands);
  const auto& classes = config.design().classes;
  const std::uint32_t t = config.t();
  const std::uint32_t per_class = config.blocks_per_class();

  // Y for a choice of block subsets, by plain set union.
  auto union_of = [&](const std::vector<std::uint32_t>& cls_ids,
                      const std::vector<std::vector<std::uint32_t>>& picks) {
    std::set<Point> out;
    for (std::size_t s = 0; s < cls_ids.size(); ++s) {
      for (std::uint32_t blk : picks[s]) {
        const Block& block = classes[cls_ids[s]][blk];
        out.insert(block.begin(), block.end());
      }
    }
    return out;
  };
  // Every tuple drawn from the per-position option lists.
  auto tuples = [](const std::vector<std::vector<std::vector<std::uint32_t>>>&
                       options) {
    std::vector<std::vector<std::vector<std::uint32_t>>> out{{}};
    for (const auto& opts : options) {
      std::vector<std::vector<std::vector<std::uint32_t>>> next;
      for (const auto& prefix : out) {
        for (const auto& o : opts) {
          auto extended = prefix;
          extended.push_back(o);
          next.push_back(std::move(extended));
        }
      }
      out = std::move(next);
    }
    return out;
  };

  OracleResult result;
  result.all_cover = true;
  const auto all_supersets = combinations(per_class, t + 1);
  for (const auto& user : enumerate_users(config)) {
    const std::size_t z = user.classes.size();
    const std::set<Point> own = union_of(user.classes, user.blocks);
    std::set<Point> got;

    std::vector<std::vector<std::vector<std::uint32_t>>> superset_options(
        z, all_supersets);
    for (const auto& pool : tuples(superset_options)) {
      bool contains = true;
      for (std::size_t s = 0; s < z && contains; ++s) {
        contains = std::includes(pool[s].begin(), pool[s].end(),
                                 user.blocks[s].begin(), user.blocks[s].end());
      }
      if (!contains) continue;

      std::vector<std::vector<std::vector<std::uint32_t>>> member_options(z);
      for (std::size_t s = 0; s < z; ++s) {
        for (const auto& pick : combinations(t + 1, t)) {
          std::vector<std::uint32_t> subset;
          for (std::uint32_t i : pick) subset.push_back(pool[s][i]);
          member_options[s].push_back(std::move(subset));
        }
      }
      std::optional<std::set<Point>> common;
      for (const auto& other : tuples(member_options)) {
        if (other == user.blocks) continue;
        const std::set<Point> y = union_of(user.classes, other);
        if (!common) {
          common = y;
          continue;
        }
        std::set<Point> narrowed;
        std::set_intersection(common->begin(), common->end(), y.begin(),
                              y.end(),
                              std::inserter(narrowed, narrowed.begin()));
        common = std::move(narrowed);
      }
      if (common) got.insert(common->begin(), common->end());
    }

    std::set<Point> complement;
    for (Point p = 1; p <= config.v(); ++p) {
      if (!own.count(p)) complement.insert(p);
    }
    const bool covers = got == complement;
    result.all_cover = result.all_cover && covers;
    result.covers_complement.push_back(covers);
    result.recovered.emplace_back(got.begin(), got.end());
  }
  return result;
}

bool oracle_agrees(const OracleResult& oracle, const DecodeReport& report) {
  if (oracle.recovered.size() != report.users.size()) return false;
  for (std::size_t m = 0; m < report.users.size(); ++m) {
    if (oracle.recovered[m] != report.users[m].recovered) return false;
  }
  return true;
}

}  // namespace crd

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
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crd/combinatorics.hpp"

namespace crd {

PointSet to_point_set(const Block& block, std::uint32_t v) {
  PointSet set(v);
  for (Point p : block) {
    if (p >= 1 && p <= v) set.set(p - 1);
  }
  return set;
}

std::vector<Point> to_points(const PointSet& set) {
  std::vector<Point> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Point>(i + 1));
  }
  return out;
}

std::size_t ResolvableDesign::b() const {
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.size();
  return total;
}

std::size_t ResolvableDesign::k() const {
  for (const auto& cls : classes) {
    if (!cls.empty()) return cls.front().size();
  }
  return 0;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

namespace {

std::string list_points(const std::vector<Point>& points) {
  constexpr std::size_t kShown = 8;
  std::ostringstream os;
  for (std::size_t i = 0; i < points.size() && i < kShown; ++i) {
    if (i) os << ",";
    os << points[i];
  }
  if (points.size() > kShown) os << ",...";
  return os.str();
}

std::vector<std::vector<PointSet>> block_sets(const ResolvableDesign& design) {
  std::vector<std::vector<PointSet>> sets;
  sets.reserve(design.r());
  for (const auto& cls : design.classes) {
    auto& row = sets.emplace_back();
    row.reserve(cls.size());
    for (const auto& block : cls) row.push_back(to_point_set(block, design.v));
  }
  return sets;
}

}  // namespace

ValidationReport validate(const ResolvableDesign& design) {
  ValidationReport report;
  auto& out = report.violations;
  if (design.v == 0) out.push_back("v must be positive");
  if (design.classes.empty()) {
    out.push_back("design has no parallel classes");
    return report;
  }
  const std::size_t k = design.k();
  const std::uint32_t v = design.v;

  for (std::size_t c = 0; c < design.r(); ++c) {
    const auto& cls = design.classes[c];
    const std::size_t cid = c + 1;
    if (cls.empty()) {
      out.push_back("class " + std::to_string(cid) + " has no blocks");
      continue;
    }
    std::vector<std::size_t> owner(static_cast<std::size_t>(v) + 1, 0);
    bool disjoint = true;
    for (std::size_t j = 0; j < cls.size(); ++j) {
      const auto& block = cls[j];
      const std::string where =
          "class " + std::to_string(cid) + " block " + std::to_string(j + 1);
      if (block.empty()) {
        out.push_back(where + " is empty");
        continue;
      }
      if (block.size() != k) {
        out.push_back(where + " has size " + std::to_string(block.size()) +
                      ", expected " + std::to_string(k));
      }
      std::set<Point> seen;
      for (Point p : block) {
        if (p < 1 || p > v) {
          out.push_back(where + " contains point " + std::to_string(p) +
                        " outside 1.." + std::to_string(v));
          continue;
        }
        if (!seen.insert(p).second) {
          out.push_back(where + " repeats point " + std::to_string(p));
          continue;
        }
        if (owner[p] != 0 && disjoint) {
          out.push_back("class " + std::to_string(cid) +
                        " not disjoint (point " + std::to_string(p) +
                        " in blocks " + std::to_string(owner[p]) + " and " +
                        std::to_string(j + 1) + ")");
          disjoint = false;
        }
        if (owner[p] == 0) owner[p] = j + 1;
      }
    }
    std::vector<Point> missing;
    for (Point p = 1; p <= v; ++p) {
      if (owner[p] == 0) missing.push_back(p);
    }
    if (!missing.empty()) {
      out.push_back("class " + std::to_string(cid) +
                    " does not cover X (missing points " +
                    list_points(missing) + ")");
    }
  }

  if (k > 0 && v > 0) {
    if (v % k != 0) {
      out.push_back("block size " + std::to_string(k) + " does not divide v = " +
                    std::to_string(v));
    } else {
      const std::size_t expected = v / k;
      for (std::size_t c = 0; c < design.r(); ++c) {
        if (design.classes[c].size() != expected) {
          out.push_back("class " + std::to_string(c + 1) + " has " +
                        std::to_string(design.classes[c].size()) +
                        " blocks, expected b_r = v/k = " +
                        std::to_string(expected));
        }
      }
    }
  }
  return report;
}

std::optional<std::uint32_t> cross_intersection(const ResolvableDesign& design,
                                                std::size_t i) {
  if (i < 2 || i > design.r()) {
    throw std::invalid_argument("cross intersection index i=" +
                                std::to_string(i) + " outside 2.." +
                                std::to_string(design.r()));
  }
  const auto sets = block_sets(design);
  std::optional<std::size_t> value;
  bool consistent = true;

  std::vector<std::uint32_t> chosen(i);
  std::function<void(std::size_t, const PointSet&)> descend =
      [&](std::size_t depth, const PointSet& acc) {
        if (!consistent) return;
        if (depth == i) {
          const std::size_t n = acc.count();
          if (!value) value = n;
          if (*value != n) consistent = false;
          return;
        }
        for (const auto& block : sets[chosen[depth]]) {
          PointSet next = acc & block;
          // An empty partial intersection forces a zero, which rules mu_i out.
          if (next.none()) {
            consistent = false;
            return;
          }
          descend(depth + 1, next);
          if (!consistent) return;
        }
      };

  PointSet all(design.v);
  all.set();
  for (auto& subset : combinations(static_cast<std::uint32_t>(design.r()),
                                   static_cast<std::uint32_t>(i))) {
    chosen = subset;
    descend(0, all);
    if (!consistent) return std::nullopt;
  }
  if (!value || *value == 0) return std::nullopt;
  return static_cast<std::uint32_t>(*value);
}

std::optional<std::uint32_t> CrdProfile::mu_at(std::size_t i) const {
  auto it = mu.find(i);
  return it == mu.end() ? std::nullopt : it->second;
}

CrdProfile crd_profile(const ResolvableDesign& design) {
  CrdProfile profile;
  const bool valid = validate(design).ok();
  bool absent_below = false;
  for (std::size_t i = 2; i <= design.r(); ++i) {
    // In a valid design mu_{i+1} existing forces mu_i = b_r * mu_{i+1}, so the
    // first missing index rules out every larger one.
    if (valid && absent_below) {
      profile.mu[i] = std::nullopt;
      continue;
    }
    profile.mu[i] = cross_intersection(design, i);
    if (!profile.mu[i]) absent_below = true;
    if (profile.mu[i]) profile.crn = i;
  }
  profile.is_crd = profile.crn.has_value();
  profile.is_mcrd = profile.is_crd && *profile.crn == design.r();
  return profile;
}

std::optional<ResolvableDesign> find_resolution(std::uint32_t v,
                                                std::vector<Block> blocks) {
  if (blocks.size() > kMaxResolutionBlocks) {
    throw std::length_error("resolution search limited to " +
                            std::to_string(kMaxResolutionBlocks) +
                            " blocks, got " + std::to_string(blocks.size()));
  }
  if (blocks.empty() || v == 0) {
    throw std::invalid_argument("resolution search needs v > 0 and blocks");
  }
  const std::size_t k = blocks.front().size();
  bool uniform = true;
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    if (block.empty() ||
        std::adjacent_find(block.begin(), block.end()) != block.end() ||
        block.front() < 1 || block.back() > v) {
      throw std::invalid_argument("block labels must be distinct and in 1..v");
    }
    uniform = uniform && block.size() == k;
  }
  if (!uniform || v % k != 0) return std::nullopt;
  const std::size_t per_class = v / k;
  if (blocks.size() % per_class != 0) return std::nullopt;

  std::vector<PointSet> sets;
  for (const auto& block : blocks) sets.push_back(to_point_set(block, v));
  std::vector<bool> used(blocks.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> current;

  std::function<bool()> next_class;
  std::function<bool(const PointSet&)> fill = [&](const PointSet& covered) {
    if (covered.all()) {
      classes.push_back(current);
      if (next_class()) return true;
      classes.pop_back();
      return false;
    }
    std::size_t point = 0;
    while (covered.test(point)) ++point;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (used[j] || !sets[j].test(point) || sets[j].intersects(covered)) {
        continue;
      }
      used[j] = true;
      current.push_back(j);
      if (fill(covered | sets[j])) return true;
      current.pop_back();
      used[j] = false;
    }
    return false;
  };
  next_class = [&]() {
    auto seed = std::find(used.begin(), used.end(), false);
    if (seed == used.end()) return true;
    const auto j = static_cast<std::size_t>(seed - used.begin());
    const auto saved = current;
    current = {j};
    used[j] = true;
    if (fill(sets[j])) return true;
    used[j] = false;
    current = saved;
    return false;
  };

  if (!next_class()) return std::nullopt;
  ResolvableDesign design;
  design.v = v;
  for (const auto& cls : classes) {
    auto& out = design.classes.emplace_back();
    for (std::size_t j : cls) out.push_back(blocks[j]);
  }
  return design;
}

RelabeledDesign relabel_points(
    const std::vector<std::vector<std::vector<std::int64_t>>>& classes) {
  RelabeledDesign out;
  std::set<std::int64_t> labels;
  for (const auto& cls : classes) {
    for (const auto& block : cls) labels.insert(block.begin(), block.end());
  }
  out.original_labels.assign(labels.begin(), labels.end());
  std::map<std::int64_t, Point> index;
  for (std::size_t i = 0; i < out.original_labels.size(); ++i) {
    index[out.original_labels[i]] = static_cast<Point>(i + 1);
  }
  out.design.v = static_cast<std::uint32_t>(labels.size());
  for (const auto& cls : classes) {
    auto& dst = out.design.classes.emplace_back();
    for (const auto& block : cls) {
      Block mapped;
      for (auto label : block) mapped.push_back(index.at(label));
      std::sort(mapped.begin(), mapped.end());
      dst.push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace crd

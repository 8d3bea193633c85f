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


#include "crd/builtin.hpp"

#include <map>
#include <stdexcept>

namespace crd {

namespace {

const std::map<std::string, ResolvableDesign, std::less<>>& catalog() {
  static const std::map<std::string, ResolvableDesign, std::less<>> designs = {
      {"example1",
       {4,
        {{{1, 2}, {3, 4}},
         {{1, 3}, {2, 4}},
         {{1, 4}, {2, 3}}}}},
      {"example2",
       {6,
        {{{1, 2, 3}, {4, 5, 6}},
         {{1, 4, 5}, {2, 3, 6}}}}},
      {"example3",
       {9,
        {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}},
         {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}}}}},
      {"example4",
       {8,
        {{{1, 2, 3, 4}, {5, 6, 7, 8}},
         {{1, 2, 5, 6}, {3, 4, 7, 8}},
         {{1, 3, 5, 7}, {2, 4, 6, 8}}}}},
      {"example5",
       {12,
        {{{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}},
         {{1, 2, 3, 7, 8, 9}, {4, 5, 6, 10, 11, 12}}}}},
      {"example6",
       {9,
        {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}},
         {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}},
         {{1, 5, 9}, {2, 6, 7}, {3, 4, 8}},
         {{1, 6, 8}, {2, 4, 9}, {3, 5, 7}}}}},
      {"example7",
       {27,
        {{{1, 4, 7, 10, 13, 16, 19, 22, 25},
          {2, 5, 8, 11, 14, 17, 20, 23, 26},
          {3, 6, 9, 12, 15, 18, 21, 24, 27}},
         {{1, 2, 3, 10, 11, 12, 19, 20, 21},
          {4, 5, 6, 13, 14, 15, 22, 23, 24},
          {7, 8, 9, 16, 17, 18, 25, 26, 27}},
         {{1, 2, 3, 4, 5, 6, 7, 8, 9},
          {10, 11, 12, 13, 14, 15, 16, 17, 18},
          {19, 20, 21, 22, 23, 24, 25, 26, 27}}}}},
      {"example8",
       {16,
        {{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}},
         {{1, 5, 9, 13}, {2, 6, 10, 14}, {3, 7, 11, 15}, {4, 8, 12, 16}},
         {{1, 6, 11, 16}, {2, 7, 12, 13}, {3, 8, 9, 14}, {4, 5, 10, 15}}}}},
  };
  return designs;
}

}  // namespace

ResolvableDesign builtin(std::string_view name) {
  const auto& designs = catalog();
  auto it = designs.find(name);
  if (it == designs.end()) {
    throw std::invalid_argument("unknown builtin design '" + std::string(name) +
                                "' (expected example1..example8)");
  }
  return it->second;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, design] : catalog()) names.push_back(name);
  return names;
}

}  // namespace crd

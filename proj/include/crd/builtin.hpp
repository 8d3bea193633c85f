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


#ifndef CRD_BUILTIN_HPP_
#define CRD_BUILTIN_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "crd/design.hpp"

namespace crd {

// Reference designs "example1" .. "example8", stored verbatim with class and
// block order as published. Throws std::invalid_argument for unknown names.
ResolvableDesign builtin(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace crd

#endif  // CRD_BUILTIN_HPP_

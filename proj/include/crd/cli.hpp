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


#ifndef CRD_CLI_HPP_
#define CRD_CLI_HPP_

#include <ostream>

namespace crd {

// Entry point of the `crdcache` tool. Subcommands: construct, inspect,
// simulate, verify, sweep, compare. Returns 0 on success, 1 on domain
// failures (including a failed verification) and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace crd

#endif  // CRD_CLI_HPP_

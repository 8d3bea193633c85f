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


#ifndef CRD_DESIGN_IO_HPP_
#define CRD_DESIGN_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "crd/design.hpp"

namespace crd {

// Design documents come in two forms.
//
// JSON:
//   {"v": 4, "classes": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]}
//
// Plain (one block per line, '#' starts a comment):
//   v 4
//   class
//   1 2
//   3 4
//   class
//   1 3
//   2 4
//
// A document whose first non-blank character is '{' is read as JSON.
enum class DesignFormat { kJson, kPlain };

class DesignSyntaxError : public std::runtime_error {
 public:
  DesignSyntaxError(std::size_t line, std::size_t column,
                    const std::string& message);
  // Structural errors in JSON documents carry a path such as
  // "classes[0][2]" instead of a position; line() and column() are 0.
  DesignSyntaxError(const std::string& path, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DesignSemanticError : public std::runtime_error {
 public:
  explicit DesignSemanticError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Canonical form: points sorted within blocks, class and block order kept.
std::string serialize_design(const ResolvableDesign& design,
                             DesignFormat format = DesignFormat::kJson);

// Returns a validated design, or throws DesignSyntaxError /
// DesignSemanticError.
ResolvableDesign parse_design(std::string_view text);

}  // namespace crd

#endif  // CRD_DESIGN_IO_HPP_

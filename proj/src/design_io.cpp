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


#include "crd/design_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace crd {

DesignSyntaxError::DesignSyntaxError(std::size_t line, std::size_t column,
                                     const std::string& message)
    : std::runtime_error("syntax error at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

DesignSyntaxError::DesignSyntaxError(const std::string& path,
                                     const std::string& message)
    : std::runtime_error("syntax error at " + path + ": " + message),
      line_(0),
      column_(0) {}

DesignSemanticError::DesignSemanticError(ValidationReport report)
    : std::runtime_error("invalid design: " + report.summary()),
      report_(std::move(report)) {}

std::string serialize_design(const ResolvableDesign& design,
                             DesignFormat format) {
  std::ostringstream os;
  auto sorted = [](Block block) {
    std::sort(block.begin(), block.end());
    return block;
  };
  if (format == DesignFormat::kPlain) {
    os << "v " << design.v << "\n";
    for (const auto& cls : design.classes) {
      os << "class\n";
      for (const auto& block : cls) {
        const Block b = sorted(block);
        for (std::size_t i = 0; i < b.size(); ++i) {
          os << (i ? " " : "") << b[i];
        }
        os << "\n";
      }
    }
    return os.str();
  }
  os << "{\n  \"v\": " << design.v << ",\n  \"classes\": [";
  for (std::size_t c = 0; c < design.classes.size(); ++c) {
    os << (c ? ",\n    [" : "\n    [");
    const auto& cls = design.classes[c];
    for (std::size_t j = 0; j < cls.size(); ++j) {
      os << (j ? ", [" : "[");
      const Block b = sorted(cls[j]);
      for (std::size_t i = 0; i < b.size(); ++i) {
        os << (i ? ", " : "") << b[i];
      }
      os << "]";
    }
    os << "]";
  }
  os << (design.classes.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Point parse_label(const nlohmann::json& node, const std::string& path) {
  if (!node.is_number_integer()) {
    throw DesignSyntaxError(path, "point label must be an integer");
  }
  const auto value = node.get<std::int64_t>();
  if (value < 1 || value > std::numeric_limits<std::uint32_t>::max()) {
    throw DesignSyntaxError(path, "point label must be positive");
  }
  return static_cast<Point>(value);
}

ResolvableDesign parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    const auto [line, column] = line_column(text, offset);
    throw DesignSyntaxError(line, column, "malformed JSON");
  }
  if (!doc.is_object()) {
    throw DesignSyntaxError(1, 1, "document must be an object");
  }
  if (!doc.contains("v") || !doc["v"].is_number_integer() ||
      doc["v"].get<std::int64_t>() < 1 ||
      doc["v"].get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw DesignSyntaxError("v", "must be a positive integer");
  }
  if (!doc.contains("classes") || !doc["classes"].is_array()) {
    throw DesignSyntaxError("classes", "must be an array");
  }
  ResolvableDesign design;
  design.v = doc["v"].get<std::uint32_t>();
  const auto& classes = doc["classes"];
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::string cpath = "classes[" + std::to_string(c) + "]";
    if (!classes[c].is_array()) {
      throw DesignSyntaxError(cpath, "must be an array of blocks");
    }
    auto& cls = design.classes.emplace_back();
    for (std::size_t j = 0; j < classes[c].size(); ++j) {
      const std::string bpath = cpath + "[" + std::to_string(j) + "]";
      const auto& node = classes[c][j];
      if (!node.is_array()) {
        throw DesignSyntaxError(bpath, "must be an array of labels");
      }
      Block block;
      for (std::size_t i = 0; i < node.size(); ++i) {
        block.push_back(
            parse_label(node[i], bpath + "[" + std::to_string(i) + "]"));
      }
      cls.push_back(std::move(block));
    }
  }
  return design;
}

ResolvableDesign parse_plain(std::string_view text) {
  ResolvableDesign design;
  bool have_v = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (tokens.empty()) continue;

    auto number = [&](const std::pair<std::string_view, std::size_t>& tok) {
      std::uint64_t value = 0;
      if (tok.first.empty() || tok.first.size() > 10) {
        throw DesignSyntaxError(line_no, tok.second,
                                "expected a positive integer");
      }
      for (char ch : tok.first) {
        if (ch < '0' || ch > '9') {
          throw DesignSyntaxError(line_no, tok.second,
                                  "expected a positive integer, got '" +
                                      std::string(tok.first) + "'");
        }
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      if (value == 0 || value > std::numeric_limits<std::uint32_t>::max()) {
        throw DesignSyntaxError(line_no, tok.second,
                                "expected a positive integer");
      }
      return static_cast<std::uint32_t>(value);
    };

    if (!have_v) {
      if (tokens[0].first != "v" || tokens.size() != 2) {
        throw DesignSyntaxError(line_no, tokens[0].second,
                                "expected header 'v <count>'");
      }
      design.v = number(tokens[1]);
      have_v = true;
      continue;
    }
    if (tokens[0].first == "class") {
      if (tokens.size() != 1) {
        throw DesignSyntaxError(line_no, tokens[1].second,
                                "unexpected text after 'class'");
      }
      design.classes.emplace_back();
      continue;
    }
    if (design.classes.empty()) {
      throw DesignSyntaxError(line_no, tokens[0].second,
                              "block listed before the first 'class' line");
    }
    Block block;
    for (const auto& tok : tokens) block.push_back(number(tok));
    design.classes.back().push_back(std::move(block));
  }
  if (!have_v) throw DesignSyntaxError(line_no, 1, "missing header 'v <count>'");
  return design;
}

}  // namespace

ResolvableDesign parse_design(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  ResolvableDesign design = (first != std::string_view::npos && text[first] == '{')
                                ? parse_json(text)
                                : parse_plain(text);
  for (auto& cls : design.classes) {
    for (auto& block : cls) std::sort(block.begin(), block.end());
  }
  ValidationReport report = validate(design);
  if (!report.ok()) throw DesignSemanticError(std::move(report));
  return design;
}

}  // namespace crd

// Copyright 2026 The ctilint Authors
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

#include "ctilint/errors.hpp"

namespace ctilint {

namespace {

std::string format_parse_message(const std::string& reason,
                                 std::size_t byte_offset, std::size_t line,
                                 std::size_t column) {
  return reason + " at byte " + std::to_string(byte_offset) + " (line " +
         std::to_string(line) + ", column " + std::to_string(column) + ")";
}

}  // namespace

ParseError::ParseError(const std::string& reason, std::size_t byte_offset,
                       std::size_t line, std::size_t column)
    : Error(format_parse_message(reason, byte_offset, line, column)),
      byte_offset_(byte_offset),
      line_(line),
      column_(column) {}

UnsupportedConstructError::UnsupportedConstructError(
    const std::string& construct, std::size_t byte_offset, std::size_t line,
    std::size_t column)
    : ParseError("unsupported construct: " + construct, byte_offset, line,
                 column),
      construct_(construct) {}

SemanticError::SemanticError(const std::string& code, const std::string& detail)
    : Error(code + ": " + detail), code_(code) {}

std::pair<std::size_t, std::size_t> line_column_at(const std::string& text,
                                                   std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = offset < text.size() ? offset : text.size();
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ParseError make_parse_error(const std::string& reason, const std::string& text,
                            std::size_t offset) {
  auto [line, column] = line_column_at(text, offset);
  return ParseError(reason, offset, line, column);
}

}  // namespace ctilint

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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctilint {

// Base type for every error the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input. Carries the byte offset the reader stopped at plus the
// 1-based line/column derived from it.
class ParseError : public Error {
 public:
  ParseError(const std::string& reason, std::size_t byte_offset,
             std::size_t line, std::size_t column);

  std::size_t byte_offset() const { return byte_offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t byte_offset_;
  std::size_t line_;
  std::size_t column_;
};

// Input that is well formed but uses a construct outside the supported
// subset (DOCTYPE, processing instructions, entity definitions, ...).
class UnsupportedConstructError : public ParseError {
 public:
  UnsupportedConstructError(const std::string& construct,
                            std::size_t byte_offset, std::size_t line,
                            std::size_t column);

  const std::string& construct() const { return construct_; }

 private:
  std::string construct_;
};

// Input that parses but violates a semantic contract. `code` is a stable
// kebab-case identifier ("unknown-standard", "duplicate-rule", ...).
class SemanticError : public Error {
 public:
  SemanticError(const std::string& code, const std::string& detail);

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A partition set that cannot be reassembled. The message names the hole.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& message) : Error(message) {}
};

// Computes the 1-based (line, column) of a byte offset within `text`.
std::pair<std::size_t, std::size_t> line_column_at(const std::string& text,
                                                   std::size_t offset);

// Convenience builder that derives line/column from the offending text.
ParseError make_parse_error(const std::string& reason, const std::string& text,
                            std::size_t offset);

}  // namespace ctilint

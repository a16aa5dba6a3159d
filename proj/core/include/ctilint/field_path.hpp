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

#include <string>
#include <string_view>
#include <vector>

namespace ctilint {

// One step of a field path: a namespace-local element name, or an attribute
// name when `is_attribute` is set. Attribute segments only appear last.
struct PathSegment {
  std::string name;
  bool is_attribute = false;

  bool operator==(const PathSegment&) const = default;
};

// Ordered, nonempty address of a field inside a document tree, rendered as
// '/'-separated segments with attributes prefixed by '@': "a/b/@c".
class FieldPath {
 public:
  FieldPath() = default;
  explicit FieldPath(std::vector<PathSegment> segments);

  // Parses "a/b/@c". Throws SemanticError("invalid-path") on empty input,
  // empty segments, non-final attribute segments, or reserved names.
  static FieldPath parse(std::string_view text);

  const std::vector<PathSegment>& segments() const { return segments_; }
  std::size_t depth() const { return segments_.size(); }
  const PathSegment& leaf() const { return segments_.back(); }
  bool empty() const { return segments_.empty(); }

  // Returns a copy extended by one trailing segment.
  FieldPath child(std::string name, bool is_attribute = false) const;

  std::string to_string() const;

  bool operator==(const FieldPath&) const = default;

 private:
  std::vector<PathSegment> segments_;
};

// Suffix pattern over field paths. Segments as in FieldPath; additionally a
// segment named "*" matches any one element segment and "@*" any one
// attribute segment. A pattern matches a path when it equals the path's
// final |pattern| segments.
class PathPattern {
 public:
  // Throws SemanticError("invalid-pattern") on syntax violations.
  static PathPattern parse(std::string_view text);

  const std::string& text() const { return text_; }
  std::size_t size() const { return segments_.size(); }
  bool matches(const FieldPath& path) const;

  bool operator==(const PathPattern&) const = default;

 private:
  std::string text_;
  std::vector<PathSegment> segments_;
};

// Convenience form used by callers holding pattern strings. Parses `pattern`
// each call; long-lived callers should hold a PathPattern instead.
bool path_matches(const FieldPath& path, std::string_view pattern);

}  // namespace ctilint

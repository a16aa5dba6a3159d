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

#include "ctilint/field_path.hpp"

#include "ctilint/errors.hpp"

namespace ctilint {

namespace {

std::vector<PathSegment> split_segments(std::string_view text,
                                        const char* error_code,
                                        bool allow_wildcards) {
  if (text.empty())
    throw SemanticError(error_code, "empty path text");
  std::vector<PathSegment> segments;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t slash = text.find('/', start);
    std::string_view piece = slash == std::string_view::npos
                                 ? text.substr(start)
                                 : text.substr(start, slash - start);
    PathSegment segment;
    if (!piece.empty() && piece.front() == '@') {
      segment.is_attribute = true;
      piece.remove_prefix(1);
    }
    if (piece.empty())
      throw SemanticError(error_code,
                          "empty segment in \"" + std::string(text) + "\"");
    if (piece.find('@') != std::string_view::npos)
      throw SemanticError(error_code, "'@' is only valid as a segment prefix");
    if (!allow_wildcards && piece == "*")
      throw SemanticError(error_code, "'*' is reserved for patterns");
    segment.name = std::string(piece);
    segments.push_back(std::move(segment));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
    if (start == text.size())
      throw SemanticError(error_code,
                          "trailing '/' in \"" + std::string(text) + "\"");
  }
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (segments[i].is_attribute)
      throw SemanticError(error_code,
                          "attribute segment not in final position in \"" +
                              std::string(text) + "\"");
  }
  return segments;
}

}  // namespace

FieldPath::FieldPath(std::vector<PathSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty())
    throw SemanticError("invalid-path", "a field path needs a segment");
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    if (segments_[i].is_attribute)
      throw SemanticError("invalid-path",
                          "attribute segment not in final position");
  }
}

FieldPath FieldPath::parse(std::string_view text) {
  return FieldPath(split_segments(text, "invalid-path", false));
}

FieldPath FieldPath::child(std::string name, bool is_attribute) const {
  FieldPath extended = *this;
  extended.segments_.push_back(PathSegment{std::move(name), is_attribute});
  return extended;
}

std::string FieldPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i != 0) out += '/';
    if (segments_[i].is_attribute) out += '@';
    out += segments_[i].name;
  }
  return out;
}

PathPattern PathPattern::parse(std::string_view text) {
  PathPattern pattern;
  pattern.segments_ = split_segments(text, "invalid-pattern", true);
  pattern.text_ = std::string(text);
  return pattern;
}

bool PathPattern::matches(const FieldPath& path) const {
  const auto& segs = path.segments();
  if (segments_.size() > segs.size()) return false;
  const std::size_t base = segs.size() - segments_.size();
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const PathSegment& want = segments_[i];
    const PathSegment& have = segs[base + i];
    if (want.is_attribute != have.is_attribute) return false;
    if (want.name != "*" && want.name != have.name) return false;
  }
  return true;
}

bool path_matches(const FieldPath& path, std::string_view pattern) {
  return PathPattern::parse(pattern).matches(path);
}

}  // namespace ctilint

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

#ifndef CTILINT_SCORING_HPP_
#define CTILINT_SCORING_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ctilint/document.hpp"
#include "ctilint/registry.hpp"

namespace ctilint {

enum class ScoringMode {
  kPerOccurrence,     // every matching node contributes
  kPerDistinctField,  // each distinct field path contributes once
};

std::string to_string(ScoringMode mode);
ScoringMode scoring_mode_from_string(const std::string& text);

// Per-node classification, aligned index-for-index with enumerate_fields.
// A node's category comes from the nearest ancestor-or-self with a direct
// rule match; among several direct matches the pattern with more segments
// wins and ties go to the higher category. Sanitized nodes and sanitizer
// marker attributes classify public (rule == nullptr), but a sanitized
// node's own match still flows down to its descendants.
struct NodeClassification {
  LeakCategory category = LeakCategory::kPublic;
  const FieldRule* rule = nullptr;
  bool inherited = false;
};

std::vector<NodeClassification> classify_document(
    const DocumentTree& tree, const Registry& registry,
    const std::string& standard_id);

// One matching occurrence: a node whose effective category is above public.
struct FieldFinding {
  FieldPath path;
  std::string value;
  LeakCategory category = LeakCategory::kPublic;
  std::string pattern;  // the winning rule's pattern
  bool inherited = false;
  SourceSpan span;
};

struct DocumentScore {
  std::string origin;
  std::string standard_id;
  ScoringMode mode = ScoringMode::kPerOccurrence;
  double total = 0.0;
  // Matching fields (or occurrences, depending on mode) per category.
  std::array<std::size_t, kLeakCategoryCount> counts{};
  std::vector<FieldFinding> findings;  // always per occurrence, in tree order
};

// Scores one document against the rules for standard_id (plus any universal
// rules). Unknown standards score zero rather than throwing; the caller
// decides whether an unresolved standard is an error.
DocumentScore score_document(const DocumentTree& tree, const Registry& registry,
                             const std::string& standard_id,
                             ScoringMode mode = ScoringMode::kPerOccurrence,
                             const WeightProfile* weights = nullptr);

struct CorpusItem {
  std::string origin;
  std::string text;
  std::string standard_id;  // empty means auto-detect
};

struct CorpusError {
  std::string origin;
  std::string message;
};

struct CorpusScore {
  std::vector<DocumentScore> documents;  // sorted by origin
  std::vector<CorpusError> errors;       // sorted by origin
};

// Scores every item, isolating failures: a document that does not parse, or
// whose standard cannot be detected when none was given, lands in errors and
// never aborts the rest.
CorpusScore score_corpus(const std::vector<CorpusItem>& items,
                         const Registry& registry,
                         ScoringMode mode = ScoringMode::kPerOccurrence,
                         const WeightProfile* weights = nullptr);

}  // namespace ctilint

#endif  // CTILINT_SCORING_HPP_

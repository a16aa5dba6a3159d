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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctilint {

// Leakage categories in increasing order of sensitivity. The numeric values
// are part of the contract: comparisons use them.
enum class LeakCategory {
  kPublic = 0,
  kInference = 1,
  kSensitive = 2,
  kPii = 3,
};
inline constexpr std::size_t kLeakCategoryCount = 4;

const char* to_string(LeakCategory category);
std::optional<LeakCategory> leak_category_from_string(std::string_view text);

// What kind of standard an identifier denotes.
enum class StandardCategory {
  kEnumeration,
  kScoringSystem,
  kLanguage,
  kTransport,
};

const char* to_string(StandardCategory category);
std::optional<StandardCategory> standard_category_from_string(
    std::string_view text);

// Per-category scoring weights. All weights are finite and non-negative;
// public conventionally weighs 0 but any non-negative value is accepted.
struct WeightProfile {
  std::array<double, kLeakCategoryCount> values{0.0, 1.0, 2.0, 4.0};

  double weight(LeakCategory category) const {
    return values[static_cast<std::size_t>(category)];
  }
  double& weight(LeakCategory category) {
    return values[static_cast<std::size_t>(category)];
  }

  bool operator==(const WeightProfile&) const = default;
};

// A sharing standard known to the registry. `flags`, `declared_score` and
// `score_note` record metadata about rows whose published score disagrees
// with the transcribed field rules ("inconsistent-source").
struct StandardDescriptor {
  std::string id;  // lowercase, stable ("iodef")
  std::string name;
  StandardCategory category = StandardCategory::kEnumeration;
  std::string description;
  std::vector<std::string> flags;
  std::optional<int> declared_score;
  std::string score_note;

  bool has_flag(std::string_view flag) const;

  bool operator==(const StandardDescriptor&) const = default;
};

// A leakage rule: fields of `standard_id` whose paths match `pattern` carry
// `category`. The category is never kPublic; absence of a rule means public.
// Universal rules additionally apply to documents of unknown standard.
struct FieldRule {
  std::string standard_id;
  std::string pattern;
  LeakCategory category = LeakCategory::kInference;
  bool universal = false;

  bool operator==(const FieldRule&) const = default;
};

struct ValidationIssue {
  std::string code;  // "dangling-standard", "duplicate-rule", ...
  std::string detail;

  bool operator==(const ValidationIssue&) const = default;
};

// The rule registry. Treated as immutable once constructed; safe to share
// across threads read-only.
struct Registry {
  std::vector<StandardDescriptor> standards;
  std::vector<FieldRule> rules;
  WeightProfile default_weights;

  const StandardDescriptor* find_standard(std::string_view id) const;

  // Rules whose standard matches `standard_id`, plus universal rules (which
  // are the only ones returned for "unknown").
  std::vector<const FieldRule*> rules_for(std::string_view standard_id) const;

  bool operator==(const Registry&) const = default;
};

// The built-in registry: the full set of standards and per-field rules the
// linter ships with. Constructed once; subsequent calls return the same
// object.
const Registry& builtin_registry();

// Parses a registry from its JSON file format:
//   {"standards":[{"id","name","category","description"}...],
//    "rules":[{"standard","pattern","category"}...],
//    "weights":{"public":0,"inference":1,"sensitive":2,"pii":4}}
// Optional keys: standards may carry "flags", "declared_score", "score_note";
// rules may carry "universal". Throws ParseError (with line/column) on
// malformed JSON and SemanticError on contract violations (unknown standard,
// duplicate pattern, invalid category, negative weight).
Registry load_rules(const std::string& json_text);

// Canonical JSON rendering of a registry; load_rules(serialize_registry(r))
// reproduces r exactly.
std::string serialize_registry(const Registry& registry);

// Parses a standalone weight profile, a JSON object with any subset of the
// category names as keys: {"public":0,"inference":1,"sensitive":2,"pii":4}.
// Missing categories keep their defaults. Same error contract as load_rules.
WeightProfile weight_profile_from_json(const std::string& json_text);

// Checks the registry invariants without throwing. Returned codes include
// "dangling-standard", "duplicate-rule", "duplicate-standard",
// "invalid-pattern", "invalid-weight", "invalid-id".
std::vector<ValidationIssue> validate_registry(const Registry& registry);

// Schema-level score of a standard: the sum over its distinct field rules of
// the rule category's weight. Throws SemanticError("unknown-standard") when
// the id is not registered.
double static_schema_score(const Registry& registry, std::string_view standard_id,
                           const WeightProfile& weights);
double static_schema_score(const Registry& registry,
                           std::string_view standard_id);

}  // namespace ctilint

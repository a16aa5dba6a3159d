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

#include "ctilint/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "ctilint/errors.hpp"
#include "ctilint/field_path.hpp"

namespace ctilint {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kLeakCategoryNames[kLeakCategoryCount] = {
    "public", "inference", "sensitive", "pii"};

constexpr const char* kStandardCategoryNames[] = {
    "enumeration", "scoring-system", "language", "transport"};

bool is_lower_token(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u) && c != '-' && c != '_')
      return false;
  }
  return true;
}

const ordered_json& require_member(const ordered_json& object,
                                   const char* key, const char* where) {
  auto it = object.find(key);
  if (it == object.end())
    throw SemanticError("missing-key",
                        std::string(where) + " lacks required key \"" + key +
                            "\"");
  return *it;
}

std::string require_string(const ordered_json& object, const char* key,
                           const char* where) {
  const ordered_json& member = require_member(object, key, where);
  if (!member.is_string())
    throw SemanticError("invalid-type", std::string(where) + " key \"" + key +
                                            "\" must be a string");
  return member.get<std::string>();
}

void check_weight(double value, const char* key) {
  if (!std::isfinite(value) || value < 0)
    throw SemanticError("invalid-weight",
                        std::string("weight \"") + key +
                            "\" must be a finite non-negative number");
}

}  // namespace

const char* to_string(LeakCategory category) {
  return kLeakCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<LeakCategory> leak_category_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kLeakCategoryCount; ++i) {
    if (text == kLeakCategoryNames[i]) return static_cast<LeakCategory>(i);
  }
  return std::nullopt;
}

const char* to_string(StandardCategory category) {
  return kStandardCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<StandardCategory> standard_category_from_string(
    std::string_view text) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (text == kStandardCategoryNames[i])
      return static_cast<StandardCategory>(i);
  }
  return std::nullopt;
}

bool StandardDescriptor::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

const StandardDescriptor* Registry::find_standard(std::string_view id) const {
  for (const StandardDescriptor& standard : standards) {
    if (standard.id == id) return &standard;
  }
  return nullptr;
}

std::vector<const FieldRule*> Registry::rules_for(
    std::string_view standard_id) const {
  std::vector<const FieldRule*> matching;
  for (const FieldRule& rule : rules) {
    if (rule.standard_id == standard_id || rule.universal)
      matching.push_back(&rule);
  }
  return matching;
}

Registry load_rules(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw make_parse_error(e.what(), json_text, offset);
  }
  if (!doc.is_object())
    throw SemanticError("invalid-type", "registry document must be an object");

  Registry registry;

  const ordered_json& standards =
      require_member(doc, "standards", "registry document");
  if (!standards.is_array())
    throw SemanticError("invalid-type", "\"standards\" must be an array");
  for (const ordered_json& entry : standards) {
    StandardDescriptor standard;
    standard.id = require_string(entry, "id", "standard entry");
    if (!is_lower_token(standard.id))
      throw SemanticError("invalid-id", "standard id \"" + standard.id +
                                            "\" must be a lowercase token");
    standard.name = require_string(entry, "name", "standard entry");
    const std::string category =
        require_string(entry, "category", "standard entry");
    auto parsed_category = standard_category_from_string(category);
    if (!parsed_category)
      throw SemanticError("invalid-category",
                          "standard \"" + standard.id +
                              "\" has unknown category \"" + category + "\"");
    standard.category = *parsed_category;
    standard.description =
        require_string(entry, "description", "standard entry");
    if (auto it = entry.find("flags"); it != entry.end()) {
      if (!it->is_array())
        throw SemanticError("invalid-type", "\"flags\" must be an array");
      for (const ordered_json& flag : *it)
        standard.flags.push_back(flag.get<std::string>());
    }
    if (auto it = entry.find("declared_score"); it != entry.end())
      standard.declared_score = it->get<int>();
    if (auto it = entry.find("score_note"); it != entry.end())
      standard.score_note = it->get<std::string>();
    if (registry.find_standard(standard.id))
      throw SemanticError("duplicate-standard",
                          "standard \"" + standard.id + "\" appears twice");
    registry.standards.push_back(std::move(standard));
  }

  const ordered_json& rules = require_member(doc, "rules", "registry document");
  if (!rules.is_array())
    throw SemanticError("invalid-type", "\"rules\" must be an array");
  std::set<std::pair<std::string, std::string>> seen;
  for (const ordered_json& entry : rules) {
    FieldRule rule;
    rule.standard_id = require_string(entry, "standard", "rule entry");
    rule.pattern = require_string(entry, "pattern", "rule entry");
    const std::string category = require_string(entry, "category", "rule entry");
    auto parsed_category = leak_category_from_string(category);
    if (!parsed_category || *parsed_category == LeakCategory::kPublic)
      throw SemanticError("invalid-category",
                          "rule \"" + rule.standard_id + ":" + rule.pattern +
                              "\" has invalid category \"" + category + "\"");
    rule.category = *parsed_category;
    if (auto it = entry.find("universal"); it != entry.end())
      rule.universal = it->get<bool>();
    if (!registry.find_standard(rule.standard_id))
      throw SemanticError("unknown-standard",
                          "rule \"" + rule.pattern +
                              "\" references unregistered standard \"" +
                              rule.standard_id + "\"");
    PathPattern::parse(rule.pattern);  // throws SemanticError invalid-pattern
    if (!seen.insert({rule.standard_id, rule.pattern}).second)
      throw SemanticError("duplicate-rule",
                          "rule \"" + rule.standard_id + ":" + rule.pattern +
                              "\" appears twice");
    registry.rules.push_back(std::move(rule));
  }

  if (auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_object())
      throw SemanticError("invalid-type", "\"weights\" must be an object");
    for (std::size_t i = 0; i < kLeakCategoryCount; ++i) {
      const char* key = kLeakCategoryNames[i];
      if (auto weight = it->find(key); weight != it->end()) {
        if (!weight->is_number())
          throw SemanticError("invalid-weight",
                              std::string("weight \"") + key +
                                  "\" must be a number");
        const double value = weight->get<double>();
        check_weight(value, key);
        registry.default_weights.values[i] = value;
      }
    }
  }

  return registry;
}

WeightProfile weight_profile_from_json(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw make_parse_error(e.what(), json_text, offset);
  }
  if (!doc.is_object())
    throw SemanticError("invalid-type", "weight profile must be an object");
  WeightProfile profile;
  for (const auto& [key, value] : doc.items()) {
    auto category = leak_category_from_string(key);
    if (!category)
      throw SemanticError("invalid-category",
                          "weight profile key \"" + key +
                              "\" is not a leak category");
    if (!value.is_number())
      throw SemanticError("invalid-weight",
                          "weight \"" + key + "\" must be a number");
    const double weight = value.get<double>();
    check_weight(weight, key.c_str());
    profile.values[static_cast<std::size_t>(*category)] = weight;
  }
  return profile;
}

std::string serialize_registry(const Registry& registry) {
  ordered_json doc;
  ordered_json standards = ordered_json::array();
  for (const StandardDescriptor& standard : registry.standards) {
    ordered_json entry;
    entry["id"] = standard.id;
    entry["name"] = standard.name;
    entry["category"] = to_string(standard.category);
    entry["description"] = standard.description;
    if (!standard.flags.empty()) entry["flags"] = standard.flags;
    if (standard.declared_score) entry["declared_score"] = *standard.declared_score;
    if (!standard.score_note.empty()) entry["score_note"] = standard.score_note;
    standards.push_back(std::move(entry));
  }
  doc["standards"] = std::move(standards);

  ordered_json rules = ordered_json::array();
  for (const FieldRule& rule : registry.rules) {
    ordered_json entry;
    entry["standard"] = rule.standard_id;
    entry["pattern"] = rule.pattern;
    entry["category"] = to_string(rule.category);
    if (rule.universal) entry["universal"] = true;
    rules.push_back(std::move(entry));
  }
  doc["rules"] = std::move(rules);

  ordered_json weights;
  for (std::size_t i = 0; i < kLeakCategoryCount; ++i)
    weights[kLeakCategoryNames[i]] = registry.default_weights.values[i];
  doc["weights"] = std::move(weights);

  return doc.dump(2) + "\n";
}

std::vector<ValidationIssue> validate_registry(const Registry& registry) {
  std::vector<ValidationIssue> issues;

  std::set<std::string> ids;
  for (const StandardDescriptor& standard : registry.standards) {
    if (!is_lower_token(standard.id))
      issues.push_back({"invalid-id", "standard id \"" + standard.id +
                                          "\" is not a lowercase token"});
    if (!ids.insert(standard.id).second)
      issues.push_back({"duplicate-standard",
                        "standard \"" + standard.id + "\" appears twice"});
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const FieldRule& rule : registry.rules) {
    const std::string label = rule.standard_id + ":" + rule.pattern;
    if (!ids.contains(rule.standard_id))
      issues.push_back({"dangling-standard",
                        "rule \"" + label +
                            "\" references an unregistered standard"});
    try {
      PathPattern::parse(rule.pattern);
    } catch (const SemanticError& e) {
      issues.push_back({"invalid-pattern",
                        "rule \"" + label + "\": " + e.what()});
    }
    if (!seen.insert({rule.standard_id, rule.pattern}).second)
      issues.push_back({"duplicate-rule", "rule \"" + label + "\" appears twice"});
  }

  for (std::size_t i = 0; i < kLeakCategoryCount; ++i) {
    const double value = registry.default_weights.values[i];
    if (!std::isfinite(value) || value < 0)
      issues.push_back({"invalid-weight",
                        std::string("weight \"") + kLeakCategoryNames[i] +
                            "\" is not a finite non-negative number"});
  }

  return issues;
}

double static_schema_score(const Registry& registry,
                           std::string_view standard_id,
                           const WeightProfile& weights) {
  if (!registry.find_standard(standard_id))
    throw SemanticError("unknown-standard",
                        "no standard registered as \"" +
                            std::string(standard_id) + "\"");
  std::set<std::string> counted;
  double score = 0;
  for (const FieldRule& rule : registry.rules) {
    if (rule.standard_id != standard_id) continue;
    if (!counted.insert(rule.pattern).second) continue;
    score += weights.weight(rule.category);
  }
  return score;
}

double static_schema_score(const Registry& registry,
                           std::string_view standard_id) {
  return static_schema_score(registry, standard_id, registry.default_weights);
}

}  // namespace ctilint

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "ctilint/errors.hpp"
#include "ctilint/registry.hpp"
#include "test_support.hpp"

using namespace ctilint;

namespace {

const std::map<std::string, double>& frozen_scores() {
  static const std::map<std::string, double> scores = {
      {"cve", 1},   {"cwe", 1},    {"capec", 10}, {"cce", 4},
      {"cpe", 3},   {"cvss", 0},   {"cwss", 0},   {"oval", 20},
      {"xccdf", 38}, {"maec", 26}, {"cee", 15},   {"iodef", 19},
      {"stix", 36},
  };
  return scores;
}

}  // namespace

TEST_CASE("leak categories order and name round trip") {
  CHECK(LeakCategory::kPublic < LeakCategory::kInference);
  CHECK(LeakCategory::kInference < LeakCategory::kSensitive);
  CHECK(LeakCategory::kSensitive < LeakCategory::kPii);
  for (auto category : {LeakCategory::kPublic, LeakCategory::kInference,
                        LeakCategory::kSensitive, LeakCategory::kPii}) {
    auto parsed = leak_category_from_string(to_string(category));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == category);
  }
  CHECK_FALSE(leak_category_from_string("secret").has_value());
}

TEST_CASE("default weights") {
  WeightProfile weights;
  CHECK(weights.weight(LeakCategory::kPublic) == 0.0);
  CHECK(weights.weight(LeakCategory::kInference) == 1.0);
  CHECK(weights.weight(LeakCategory::kSensitive) == 2.0);
  CHECK(weights.weight(LeakCategory::kPii) == 4.0);
}

TEST_CASE("builtin schema scores are frozen") {
  const Registry& registry = builtin_registry();
  for (const auto& [id, score] : frozen_scores()) {
    CHECK_MESSAGE(static_schema_score(registry, id) == score, id);
  }
  // Transport-layer standards carry no field rules.
  for (const char* id : {"rid", "taxii", "soap", "repute"}) {
    CHECK_MESSAGE(static_schema_score(registry, id) == 0.0, id);
  }
}

TEST_CASE("cybox is flagged inconsistent") {
  const Registry& registry = builtin_registry();
  const StandardDescriptor* cybox = registry.find_standard("cybox");
  REQUIRE(cybox != nullptr);
  CHECK(cybox->has_flag("inconsistent-source"));
  REQUIRE(cybox->declared_score.has_value());
  CHECK(*cybox->declared_score == 65);
  CHECK_FALSE(cybox->score_note.empty());
  // The transcribed rules compute their own (different) total.
  CHECK(static_schema_score(registry, "cybox") == 68.0);
  CHECK(static_schema_score(registry, "cybox") != *cybox->declared_score);
}

TEST_CASE("unknown standard id throws") {
  CHECK_THROWS_AS(static_schema_score(builtin_registry(), "nonesuch"),
                  SemanticError);
  CHECK(builtin_registry().find_standard("nonesuch") == nullptr);
}

TEST_CASE("rules_for unknown returns only universal rules") {
  auto rules = builtin_registry().rules_for("unknown");
  for (const FieldRule* rule : rules) CHECK(rule->universal);
}

TEST_CASE("builtin registry validates cleanly") {
  CHECK(validate_registry(builtin_registry()).empty());
}

TEST_CASE("serialize and reload reproduces the registry") {
  const Registry& registry = builtin_registry();
  Registry reloaded = load_rules(serialize_registry(registry));
  CHECK(reloaded == registry);
  // Idempotent rendering.
  CHECK(serialize_registry(reloaded) == serialize_registry(registry));
}

TEST_CASE("load_rules reports malformed JSON with position") {
  try {
    load_rules("{\"standards\": [}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 1);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("load_rules rejects contract violations") {
  SUBCASE("rule for unregistered standard") {
    CHECK_THROWS_AS(
        load_rules(R"({"standards":[],"rules":[
          {"standard":"ghost","pattern":"a","category":"pii"}]})"),
        SemanticError);
  }
  SUBCASE("duplicate pattern within a standard") {
    CHECK_THROWS_AS(
        load_rules(R"({"standards":[{"id":"s1","name":"S1",
            "category":"language","description":""}],
          "rules":[
            {"standard":"s1","pattern":"a","category":"pii"},
            {"standard":"s1","pattern":"a","category":"sensitive"}]})"),
        SemanticError);
  }
  SUBCASE("invalid category") {
    CHECK_THROWS_AS(
        load_rules(R"({"standards":[{"id":"s1","name":"S1",
            "category":"language","description":""}],
          "rules":[{"standard":"s1","pattern":"a","category":"huge"}]})"),
        SemanticError);
  }
  SUBCASE("negative weight") {
    CHECK_THROWS_AS(
        load_rules(R"({"standards":[],"rules":[],
          "weights":{"pii":-1}})"),
        SemanticError);
  }
}

TEST_CASE("validate_registry reports issue codes") {
  Registry registry = builtin_registry();

  SUBCASE("dangling standard") {
    registry.rules.push_back({"ghost", "a/b", LeakCategory::kPii, false});
    auto issues = validate_registry(registry);
    REQUIRE_FALSE(issues.empty());
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "dangling-standard") found = true;
    }
    CHECK(found);
  }
  SUBCASE("duplicate rule") {
    registry.rules.push_back(registry.rules.front());
    auto issues = validate_registry(registry);
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "duplicate-rule") found = true;
    }
    CHECK(found);
  }
  SUBCASE("duplicate standard") {
    registry.standards.push_back(registry.standards.front());
    auto issues = validate_registry(registry);
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "duplicate-standard") found = true;
    }
    CHECK(found);
  }
  SUBCASE("invalid pattern") {
    registry.rules.push_back(
        {"iodef", "a//b", LeakCategory::kInference, false});
    auto issues = validate_registry(registry);
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "invalid-pattern") found = true;
    }
    CHECK(found);
  }
  SUBCASE("invalid weight") {
    registry.default_weights.weight(LeakCategory::kPii) = -3.0;
    auto issues = validate_registry(registry);
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "invalid-weight") found = true;
    }
    CHECK(found);
  }
  SUBCASE("invalid id") {
    registry.standards.push_back(
        {"Bad Id!", "Broken", StandardCategory::kLanguage, "", {}, {}, ""});
    auto issues = validate_registry(registry);
    bool found = false;
    for (const auto& issue : issues) {
      if (issue.code == "invalid-id") found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("schema score is monotone in the weights") {
  const Registry& registry = builtin_registry();
  WeightProfile heavier;
  heavier.weight(LeakCategory::kPii) = 8.0;
  WeightProfile zero;
  zero.values = {0.0, 0.0, 0.0, 0.0};
  for (const auto& [id, base] : frozen_scores()) {
    CHECK(static_schema_score(registry, id, heavier) >= base);
    CHECK(static_schema_score(registry, id, zero) == 0.0);
  }
  // Per-category weights decompose the score: with only one category set to
  // 1 the score counts that category's rules.
  WeightProfile only_pii;
  only_pii.values = {0.0, 0.0, 0.0, 1.0};
  CHECK(static_schema_score(registry, "iodef", only_pii) == 2.0);
}

TEST_CASE("weight profile from JSON") {
  SUBCASE("full object") {
    WeightProfile weights = weight_profile_from_json(
        R"({"public":0,"inference":2,"sensitive":3,"pii":10})");
    CHECK(weights.weight(LeakCategory::kInference) == 2.0);
    CHECK(weights.weight(LeakCategory::kSensitive) == 3.0);
    CHECK(weights.weight(LeakCategory::kPii) == 10.0);
  }
  SUBCASE("partial object keeps defaults") {
    WeightProfile weights = weight_profile_from_json(R"({"pii":7})");
    CHECK(weights.weight(LeakCategory::kPii) == 7.0);
    CHECK(weights.weight(LeakCategory::kSensitive) == 2.0);
    CHECK(weights.weight(LeakCategory::kInference) == 1.0);
  }
  SUBCASE("empty object is all defaults") {
    CHECK(weight_profile_from_json("{}") == WeightProfile{});
  }
  SUBCASE("unknown category") {
    CHECK_THROWS_AS(weight_profile_from_json(R"({"secret":1})"),
                    SemanticError);
  }
  SUBCASE("negative weight") {
    CHECK_THROWS_AS(weight_profile_from_json(R"({"pii":-2})"), SemanticError);
  }
  SUBCASE("malformed JSON") {
    CHECK_THROWS_AS(weight_profile_from_json("{"), ParseError);
  }
}

TEST_CASE("descriptor flag lookup") {
  StandardDescriptor descriptor;
  descriptor.flags = {"inconsistent-source"};
  CHECK(descriptor.has_flag("inconsistent-source"));
  CHECK_FALSE(descriptor.has_flag("other"));
}

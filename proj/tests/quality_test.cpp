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

#include <cmath>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ctilint/errors.hpp"
#include "ctilint/quality.hpp"
#include "ctilint/timeutil.hpp"
#include "test_support.hpp"

using namespace ctilint;
namespace ts = ctilint::testsupport;

namespace {

UtcSeconds at(const char* text) {
  auto parsed = parse_rfc3339(text);
  REQUIRE(parsed.has_value());
  return *parsed;
}

constexpr double kDay = 86400.0;

}  // namespace

TEST_CASE("indicator class names round trip") {
  for (auto indicator_class :
       {IndicatorClass::kDomain, IndicatorClass::kIp, IndicatorClass::kUrl,
        IndicatorClass::kFileHash, IndicatorClass::kBinary,
        IndicatorClass::kEmail, IndicatorClass::kOther}) {
    auto parsed = indicator_class_from_string(to_string(indicator_class));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == indicator_class);
  }
  CHECK_FALSE(indicator_class_from_string("registry-key").has_value());
}

TEST_CASE("timeliness decays by half lives") {
  const double half_life = 7 * kDay;
  CHECK(timeliness_score(0.0, half_life) == 1.0);
  CHECK(timeliness_score(half_life, half_life) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(timeliness_score(2 * half_life, half_life) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(timeliness_score(half_life / 2, half_life) ==
        doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
  // Strictly decreasing in age.
  double previous = 2.0;
  for (double age = 0.0; age <= 30 * kDay; age += kDay) {
    double score = timeliness_score(age, half_life);
    CHECK(score < previous);
    CHECK(score > 0.0);
    previous = score;
  }
  CHECK_THROWS_AS(timeliness_score(-1.0, half_life), SemanticError);
  CHECK_THROWS_AS(timeliness_score(10.0, 0.0), SemanticError);
  // The instant overload measures the same age.
  CHECK(timeliness_score(at("2024-03-24T00:00:00Z"), at("2024-03-31T00:00:00Z"),
                         half_life) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("provider history smooths per class") {
  ProviderProfile profile;
  profile.provider = "acme";
  CHECK(provider_class_score(profile, IndicatorClass::kDomain) == 0.5);

  profile.history[static_cast<std::size_t>(IndicatorClass::kIp)] = {3, 5};
  CHECK(provider_class_score(profile, IndicatorClass::kIp) ==
        doctest::Approx(4.0 / 7.0).epsilon(1e-12));
  // Other classes keep the prior, however lopsided the ip history is.
  CHECK(provider_class_score(profile, IndicatorClass::kDomain) == 0.5);
  CHECK(provider_class_score(profile, IndicatorClass::kBinary) == 0.5);

  profile.history[static_cast<std::size_t>(IndicatorClass::kUrl)] = {9, 5};
  CHECK_THROWS_AS(provider_class_score(profile, IndicatorClass::kUrl),
                  SemanticError);
}

TEST_CASE("per-class independence under random perturbations") {
  ts::Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    ProviderProfile profile;
    for (std::size_t c = 0; c < kIndicatorClassCount; ++c) {
      std::size_t total = rng() % 20;
      profile.history[c] = {total == 0 ? 0 : rng() % (total + 1), total};
    }
    auto scored = static_cast<IndicatorClass>(rng() % kIndicatorClassCount);
    double before = provider_class_score(profile, scored);
    // Perturb every other class arbitrarily.
    for (std::size_t c = 0; c < kIndicatorClassCount; ++c) {
      if (c == static_cast<std::size_t>(scored)) continue;
      std::size_t total = rng() % 50;
      profile.history[c] = {total == 0 ? 0 : rng() % (total + 1), total};
    }
    CHECK(provider_class_score(profile, scored) == before);
  }
}

TEST_CASE("label agreement is the modal fraction") {
  CHECK(label_agreement({}) == 0.5);
  CHECK(label_agreement({{"p1", "malware"}}) == 0.5);
  CHECK(label_agreement({{"p1", "malware"}, {"p2", "malware"}}) == 1.0);
  CHECK(label_agreement({{"p1", "malware"}, {"p2", "clean"}}) == 0.5);
  CHECK(label_agreement({{"p1", "malware"},
                         {"p2", " MALWARE "},
                         {"p3", "clean"}}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(agreement_score({"a", "b", "b", "b"}) ==
        doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("composite is the checked weighted sum") {
  QualityWeights defaults;
  CHECK(defaults.timeliness == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(defaults.provider == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(defaults.agreement == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  CHECK(composite_score(0.9, 0.6, 0.3, defaults) ==
        doctest::Approx(0.6).epsilon(1e-12));
  QualityWeights skewed{0.5, 0.25, 0.25};
  CHECK(composite_score(1.0, 0.0, 1.0, skewed) ==
        doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(composite_score(1, 1, 1, QualityWeights{0.5, 0.5, 0.5}),
                  SemanticError);
  CHECK_THROWS_AS(composite_score(1, 1, 1, QualityWeights{-0.5, 1.0, 0.5}),
                  SemanticError);
}

TEST_CASE("indicator quality combines the three parts") {
  ProviderProfile profile;
  profile.provider = "acme";
  profile.history[static_cast<std::size_t>(IndicatorClass::kDomain)] = {1, 2};

  IndicatorRecord record;
  record.provider = "acme";
  record.indicator_class = IndicatorClass::kDomain;
  record.first_shared = at("2024-03-27T00:00:00Z");
  record.labels = {{"p1", "malware"}, {"p2", "malware"}, {"p3", "clean"}};

  QualityScore score = indicator_quality(record, profile, QualityWeights{},
                                         at("2024-03-31T00:00:00Z"), 7 * kDay);
  CHECK(score.timeliness ==
        doctest::Approx(std::pow(2.0, -4.0 / 7.0)).epsilon(1e-12));
  CHECK(score.provider_component == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(score.agreement == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(score.composite ==
        doctest::Approx((score.timeliness + 0.5 + 2.0 / 3.0) / 3.0)
            .epsilon(1e-12));
}

TEST_CASE("feed parsing") {
  const std::string feed =
      R"({"provider":"acme","first_shared":"2024-03-27T00:00:00Z","value":"evil.example","class":"domain","useful":true,"labels":["malware",{"provider":"x","label":" MALWARE "}]})"
      "\n"
      "\n"
      R"({"provider":"idle","first_shared":"2024-02-15T12:00:00Z"})"
      "\n";
  std::vector<IndicatorRecord> records = parse_feed(feed);
  REQUIRE(records.size() == 2);
  CHECK(records[0].provider == "acme");
  CHECK(records[0].value == "evil.example");
  CHECK(records[0].indicator_class == IndicatorClass::kDomain);
  REQUIRE(records[0].useful.has_value());
  CHECK(*records[0].useful);
  REQUIRE(records[0].labels.size() == 2);
  // The string shorthand is an unattributed label.
  CHECK(records[0].labels[0].provider.empty());
  CHECK(records[0].labels[0].label == "malware");
  CHECK(records[0].labels[1].provider == "x");
  CHECK(records[0].labels[1].label == " MALWARE ");
  CHECK(records[1].indicator_class == IndicatorClass::kOther);
  CHECK_FALSE(records[1].useful.has_value());

  SUBCASE("errors carry the offending line") {
    try {
      parse_feed(R"({"provider":"a","first_shared":"2024-03-27T00:00:00Z"})"
                 "\nnot json\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_feed(R"({"first_shared":"2024-03-27T00:00:00Z"})"),
                    ParseError);
    CHECK_THROWS_AS(parse_feed(R"({"provider":"a"})"), ParseError);
    CHECK_THROWS_AS(
        parse_feed(R"({"provider":"a","first_shared":"yesterday"})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_feed(
            R"({"provider":"a","first_shared":"2024-03-27T00:00:00Z","class":"registry-key"})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_feed(
            R"({"provider":"a","first_shared":"2024-03-27T00:00:00Z","labels":[7]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_feed(
            R"({"provider":"a","first_shared":"2024-03-27T00:00:00Z","useful":"yes"})"),
        ParseError);
  }
}

TEST_CASE("profiles aggregate the feed per provider") {
  const std::string feed =
      R"({"provider":"acme","first_shared":"2024-03-27T00:00:00Z","class":"domain","useful":true,"labels":["malware",{"provider":"x","label":" MALWARE "},"clean"]})"
      "\n"
      R"({"provider":"acme","first_shared":"2024-03-29T00:00:00Z","class":"domain","useful":false})"
      "\n"
      R"({"provider":"idle","first_shared":"2024-02-15T00:00:00Z","class":"ip"})"
      "\n";
  std::vector<IndicatorRecord> records = parse_feed(feed);
  FreeRiderPolicy policy;
  std::vector<ProviderProfile> profiles =
      build_profiles(records, at("2024-03-31T00:00:00Z"), policy);

  REQUIRE(profiles.size() == 2);
  CHECK(profiles[0].provider == "acme");
  CHECK(profiles[1].provider == "idle");

  const ProviderProfile& acme = profiles[0];
  CHECK(acme.volume == 2);
  CHECK(acme.last_contribution == at("2024-03-29T00:00:00Z"));
  const ClassHistory& domain =
      acme.history[static_cast<std::size_t>(IndicatorClass::kDomain)];
  CHECK(domain.useful == 1);
  CHECK(domain.total == 2);
  CHECK(acme.window_submissions == 2);
  // Both records score against the final profile: provider component
  // (1+1)/(2+2), timeliness at 4 and 2 days, agreement 2/3 and the 0.5 prior.
  const double t1 = std::pow(2.0, -4.0 / 7.0);
  const double t2 = std::pow(2.0, -2.0 / 7.0);
  const double expected =
      ((t1 + 0.5 + 2.0 / 3.0) / 3.0 + (t2 + 0.5 + 0.5) / 3.0) / 2.0;
  CHECK(acme.window_mean_composite ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK_FALSE(acme.free_rider);
  CHECK(acme.reasons.empty());

  const ProviderProfile& idle = profiles[1];
  CHECK(idle.volume == 1);
  // Unadjudicated records count toward volume but not history.
  CHECK(idle.history[static_cast<std::size_t>(IndicatorClass::kIp)].total ==
        0);
  CHECK(idle.window_submissions == 0);  // 45 days old, window is 30
  CHECK(idle.window_mean_composite == 0.0);
  CHECK(idle.free_rider);
  CHECK(idle.reasons == std::vector<std::string>{"low-volume"});

  SUBCASE("re-flagging with the same thresholds reproduces the fields") {
    auto flags =
        flag_free_riders(profiles, policy.min_volume, policy.quality_cutoff);
    REQUIRE(flags.size() == 1);
    CHECK(flags[0].provider == "idle");
    CHECK(flags[0].reasons == idle.reasons);
  }
  SUBCASE("records from the future are rejected") {
    CHECK_THROWS_AS(build_profiles(records, at("2024-03-01T00:00:00Z"), policy),
                    SemanticError);
  }
}

TEST_CASE("free-rider reasons and monotonicity") {
  // Hand-built profiles: one prolific and good, one quiet, one noisy junk.
  std::vector<ProviderProfile> profiles(3);
  profiles[0].provider = "good";
  profiles[0].window_submissions = 10;
  profiles[0].window_mean_composite = 0.8;
  profiles[1].provider = "quiet";
  profiles[1].window_submissions = 0;
  profiles[1].window_mean_composite = 0.0;
  profiles[2].provider = "junk";
  profiles[2].window_submissions = 4;
  profiles[2].window_mean_composite = 0.1;

  auto flags = flag_free_riders(profiles, 1, 0.3);
  REQUIRE(flags.size() == 2);
  CHECK(flags[0].provider == "quiet");
  CHECK(flags[0].reasons == std::vector<std::string>{"low-volume"});
  CHECK(flags[1].provider == "junk");
  CHECK(flags[1].reasons == std::vector<std::string>{"low-quality"});

  // A provider with nothing in the window is never low-quality.
  for (const auto& flag : flag_free_riders(profiles, 1, 0.99)) {
    if (flag.provider == "quiet") {
      CHECK(flag.reasons == std::vector<std::string>{"low-volume"});
    }
  }
  // Both reasons can fire at once.
  auto harsh = flag_free_riders(profiles, 5, 0.3);
  for (const auto& flag : harsh) {
    if (flag.provider == "junk") {
      CHECK(flag.reasons ==
            std::vector<std::string>{"low-volume", "low-quality"});
    }
  }

  // Tightening either threshold never unflags anyone.
  ts::Rng rng(777);
  for (int i = 0; i < 200; ++i) {
    std::size_t v1 = rng() % 8;
    std::size_t v2 = v1 + rng() % 8;
    double c1 = (rng() % 100) / 100.0;
    double c2 = c1 + (rng() % 100) / 100.0;
    auto loose = flag_free_riders(profiles, v1, c1);
    auto tight = flag_free_riders(profiles, v2, c2);
    for (const auto& flag : loose) {
      bool still = false;
      for (const auto& other : tight) {
        if (other.provider == flag.provider) still = true;
      }
      CHECK(still);
    }
  }
}

TEST_CASE("profile json snapshots are deterministic and complete") {
  const std::string feed =
      R"({"provider":"acme","first_shared":"2024-03-27T00:00:00Z","class":"domain","useful":true})"
      "\n";
  std::vector<ProviderProfile> profiles =
      build_profiles(parse_feed(feed), at("2024-03-31T00:00:00Z"),
                     FreeRiderPolicy{});
  std::string a = profiles_to_json(profiles);
  std::string b = profiles_to_json(profiles);
  CHECK(a == b);
  nlohmann::json parsed = nlohmann::json::parse(a);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["provider"] == "acme");
  CHECK(parsed[0]["volume"] == 1);
  CHECK(parsed[0]["history"]["domain"]["useful"] == 1);
  CHECK(parsed[0]["history"]["domain"]["total"] == 1);
  CHECK(parsed[0]["last_contribution"] == "2024-03-27T00:00:00Z");
  CHECK(parsed[0]["free_rider"] == false);

  std::vector<FreeRiderFlag> flags = {{"quiet", {"low-volume"}}};
  nlohmann::json flags_json = nlohmann::json::parse(flags_to_json(flags));
  REQUIRE(flags_json.is_array());
  CHECK(flags_json[0]["provider"] == "quiet");
  CHECK(flags_json[0]["reasons"][0] == "low-volume");
}

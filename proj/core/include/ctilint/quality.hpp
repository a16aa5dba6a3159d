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

#ifndef CTILINT_QUALITY_HPP_
#define CTILINT_QUALITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ctilint/timeutil.hpp"

namespace ctilint {

// Indicator kinds a provider is scored on independently: being good at
// domains says nothing about being good at binaries.
enum class IndicatorClass {
  kDomain,
  kIp,
  kUrl,
  kFileHash,
  kBinary,
  kEmail,
  kOther,
};
inline constexpr std::size_t kIndicatorClassCount = 7;

std::string to_string(IndicatorClass indicator_class);
std::optional<IndicatorClass> indicator_class_from_string(
    const std::string& text);

struct IndicatorLabel {
  std::string provider;
  std::string label;
};

// One shared indicator in the feed.
struct IndicatorRecord {
  std::string value;
  IndicatorClass indicator_class = IndicatorClass::kOther;
  std::string provider;
  UtcSeconds first_shared{};
  std::vector<IndicatorLabel> labels;
  std::optional<bool> useful;  // external adjudication; absent = unknown
};

// JSON lines, one object per line. Required: "provider" (nonempty string)
// and "first_shared" (RFC 3339). Optional: "value" (string), "class" (one of
// the indicator class names, default "other"), "useful" (bool), "labels"
// (array of strings or {"provider","label"} objects). Blank lines are
// skipped; anything else is a ParseError at the offending line.
std::vector<IndicatorRecord> parse_feed(const std::string& jsonl);

// Exponential decay with a half life: 1.0 when fresh, 0.5 at one half life.
// Negative ages are a caller bug, not a data artifact, and throw.
double timeliness_score(double age_seconds, double half_life_seconds);
double timeliness_score(UtcSeconds first_shared, UtcSeconds now,
                        double half_life_seconds);

struct ClassHistory {
  std::size_t useful = 0;
  std::size_t total = 0;  // adjudicated records only
};

struct ProviderProfile {
  std::string provider;
  std::array<ClassHistory, kIndicatorClassCount> history{};
  std::size_t volume = 0;  // every record, adjudicated or not
  UtcSeconds last_contribution{};
  std::size_t window_submissions = 0;
  double window_mean_composite = 0.0;  // 0 when nothing in the window
  bool free_rider = false;
  std::vector<std::string> reasons;  // "low-volume", "low-quality"
};

// Additive-smoothed usefulness in one class: (useful + 1) / (total + 2).
// No history in the class lands exactly on the 0.5 prior, and history in
// other classes never moves it.
double provider_class_score(const ProviderProfile& profile,
                            IndicatorClass indicator_class);

// Fraction of labels agreeing with the modal label text, compared after
// lowercasing and trimming. Fewer than two labels carry no signal: 0.5.
double label_agreement(const std::vector<IndicatorLabel>& labels);
double agreement_score(const std::vector<std::string>& labels);

struct QualityWeights {
  double timeliness = 1.0 / 3.0;
  double provider = 1.0 / 3.0;
  double agreement = 1.0 / 3.0;
};

// Weighted sum of the three part scores. Weights must be nonnegative and
// sum to one (within 1e-9).
double composite_score(double timeliness, double provider, double agreement,
                       const QualityWeights& weights);

struct QualityScore {
  double timeliness = 0.0;
  double provider_component = 0.0;
  double agreement = 0.0;
  double composite = 0.0;
  QualityWeights weights;
};

// Scores one record against its provider's profile: decayed freshness, the
// provider's smoothed history in the record's class, and label agreement.
QualityScore indicator_quality(const IndicatorRecord& record,
                               const ProviderProfile& profile,
                               const QualityWeights& weights, UtcSeconds now,
                               double half_life_seconds);

struct FreeRiderPolicy {
  double window_seconds = 30.0 * 86400.0;
  std::size_t min_volume = 1;
  double quality_cutoff = 0.3;
  double half_life_seconds = 7.0 * 86400.0;
  QualityWeights weights;
};

// Aggregates the feed per provider as of `now`: per-class adjudicated
// history, total volume, and the mean composite over records shared inside
// the window. A provider free rides when it shared fewer than min_volume
// records inside the window, or when its in-window records average a
// composite below the cutoff (which cannot trigger with zero in-window
// records). Records stamped after `now` throw. Profiles come back sorted by
// provider name.
std::vector<ProviderProfile> build_profiles(
    const std::vector<IndicatorRecord>& records, UtcSeconds now,
    const FreeRiderPolicy& policy);

struct FreeRiderFlag {
  std::string provider;
  std::vector<std::string> reasons;  // "low-volume", "low-quality"
};

// Applies just the two thresholds to already-built profiles; one entry per
// flagged provider, in the profiles' order. build_profiles uses this for its
// free_rider / reasons fields, so re-flagging with the same thresholds
// reproduces them.
std::vector<FreeRiderFlag> flag_free_riders(
    const std::vector<ProviderProfile>& profiles, std::size_t min_volume,
    double quality_cutoff);

// Deterministic JSON snapshots (two-space indent).
std::string profiles_to_json(const std::vector<ProviderProfile>& profiles);
std::string flags_to_json(const std::vector<FreeRiderFlag>& flags);

}  // namespace ctilint

#endif  // CTILINT_QUALITY_HPP_

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

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "ctilint/errors.hpp"
#include "ctilint/quality.hpp"

namespace ctilint {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kClassNames[kIndicatorClassCount] = {
    "domain", "ip", "url", "file-hash", "binary", "email", "other"};

std::string normalize_label(const std::string& label) {
  std::size_t begin = 0;
  std::size_t end = label.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(label[begin])))
    ++begin;
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(label[end - 1])))
    --end;
  std::string out = label.substr(begin, end - begin);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

double age_seconds_between(UtcSeconds first_shared, UtcSeconds now) {
  return std::chrono::duration_cast<std::chrono::duration<double>>(
             now - first_shared)
      .count();
}

}  // namespace

std::string to_string(IndicatorClass indicator_class) {
  return kClassNames[static_cast<std::size_t>(indicator_class)];
}

std::optional<IndicatorClass> indicator_class_from_string(
    const std::string& text) {
  for (std::size_t i = 0; i < kIndicatorClassCount; ++i) {
    if (text == kClassNames[i]) return static_cast<IndicatorClass>(i);
  }
  return std::nullopt;
}

double timeliness_score(double age_seconds, double half_life_seconds) {
  if (!(half_life_seconds > 0.0) || !std::isfinite(half_life_seconds))
    throw SemanticError("invalid-half-life", "half life must be positive");
  if (age_seconds < 0.0)
    throw SemanticError("negative-age",
                        "age is negative; check the reference time");
  return std::exp2(-age_seconds / half_life_seconds);
}

double timeliness_score(UtcSeconds first_shared, UtcSeconds now,
                        double half_life_seconds) {
  return timeliness_score(age_seconds_between(first_shared, now),
                          half_life_seconds);
}

double provider_class_score(const ProviderProfile& profile,
                            IndicatorClass indicator_class) {
  const ClassHistory& history =
      profile.history[static_cast<std::size_t>(indicator_class)];
  if (history.useful > history.total)
    throw SemanticError("invalid-counts",
                        "useful submissions exceed the total");
  return (static_cast<double>(history.useful) + 1.0) /
         (static_cast<double>(history.total) + 2.0);
}

double agreement_score(const std::vector<std::string>& labels) {
  if (labels.size() < 2) return 0.5;
  std::map<std::string, std::size_t> votes;
  for (const std::string& label : labels) votes[normalize_label(label)] += 1;
  std::size_t modal = 0;
  for (const auto& [label, count] : votes) modal = std::max(modal, count);
  return static_cast<double>(modal) / static_cast<double>(labels.size());
}

double label_agreement(const std::vector<IndicatorLabel>& labels) {
  std::vector<std::string> texts;
  texts.reserve(labels.size());
  for (const IndicatorLabel& label : labels) texts.push_back(label.label);
  return agreement_score(texts);
}

double composite_score(double timeliness, double provider, double agreement,
                       const QualityWeights& weights) {
  const double parts[] = {weights.timeliness, weights.provider,
                          weights.agreement};
  double sum = 0.0;
  for (double w : parts) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw SemanticError("invalid-weight", "weights must be nonnegative");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw SemanticError("invalid-weight", "weights must sum to one");
  return weights.timeliness * timeliness + weights.provider * provider +
         weights.agreement * agreement;
}

QualityScore indicator_quality(const IndicatorRecord& record,
                               const ProviderProfile& profile,
                               const QualityWeights& weights, UtcSeconds now,
                               double half_life_seconds) {
  QualityScore score;
  score.weights = weights;
  score.timeliness =
      timeliness_score(record.first_shared, now, half_life_seconds);
  score.provider_component =
      provider_class_score(profile, record.indicator_class);
  score.agreement = label_agreement(record.labels);
  score.composite = composite_score(score.timeliness, score.provider_component,
                                    score.agreement, weights);
  return score;
}

std::vector<IndicatorRecord> parse_feed(const std::string& jsonl) {
  std::vector<IndicatorRecord> records;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t end = jsonl.find('\n', pos);
    if (end == std::string::npos) end = jsonl.size();
    const std::string line = jsonl.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;

    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    Json parsed;
    try {
      parsed = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw make_parse_error(e.what(), jsonl, line_start);
    }
    if (!parsed.is_object())
      throw make_parse_error("feed line is not an object", jsonl, line_start);

    IndicatorRecord record;
    if (!parsed.contains("provider") || !parsed["provider"].is_string() ||
        parsed["provider"].get<std::string>().empty())
      throw make_parse_error("feed line needs a nonempty \"provider\"", jsonl,
                             line_start);
    record.provider = parsed["provider"].get<std::string>();

    if (!parsed.contains("first_shared") ||
        !parsed["first_shared"].is_string())
      throw make_parse_error("feed line needs a \"first_shared\" timestamp",
                             jsonl, line_start);
    const std::optional<UtcSeconds> instant =
        parse_rfc3339(parsed["first_shared"].get<std::string>());
    if (!instant)
      throw make_parse_error("\"first_shared\" is not RFC 3339", jsonl,
                             line_start);
    record.first_shared = *instant;

    if (parsed.contains("value")) {
      if (!parsed["value"].is_string())
        throw make_parse_error("\"value\" must be a string", jsonl,
                               line_start);
      record.value = parsed["value"].get<std::string>();
    }
    if (parsed.contains("class")) {
      if (!parsed["class"].is_string())
        throw make_parse_error("\"class\" must be a string", jsonl,
                               line_start);
      const std::optional<IndicatorClass> parsed_class =
          indicator_class_from_string(parsed["class"].get<std::string>());
      if (!parsed_class)
        throw make_parse_error("unknown indicator class", jsonl, line_start);
      record.indicator_class = *parsed_class;
    }
    if (parsed.contains("useful")) {
      if (!parsed["useful"].is_boolean())
        throw make_parse_error("\"useful\" must be a boolean", jsonl,
                               line_start);
      record.useful = parsed["useful"].get<bool>();
    }
    if (parsed.contains("labels")) {
      if (!parsed["labels"].is_array())
        throw make_parse_error("\"labels\" must be an array", jsonl,
                               line_start);
      for (const Json& entry : parsed["labels"]) {
        IndicatorLabel label;
        if (entry.is_string()) {
          label.label = entry.get<std::string>();
        } else if (entry.is_object() && entry.contains("label") &&
                   entry["label"].is_string()) {
          label.label = entry["label"].get<std::string>();
          if (entry.contains("provider") && entry["provider"].is_string())
            label.provider = entry["provider"].get<std::string>();
        } else {
          throw make_parse_error(
              "labels must be strings or {\"provider\",\"label\"} objects",
              jsonl, line_start);
        }
        record.labels.push_back(std::move(label));
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ProviderProfile> build_profiles(
    const std::vector<IndicatorRecord>& records, UtcSeconds now,
    const FreeRiderPolicy& policy) {
  if (!(policy.window_seconds > 0.0))
    throw SemanticError("invalid-window", "window must be positive");

  // First pass: whole-feed per-class history, which feeds the provider part
  // of every record's composite.
  std::map<std::string, ProviderProfile> profiles;
  for (const IndicatorRecord& record : records) {
    ProviderProfile& profile = profiles[record.provider];
    if (profile.volume == 0 || record.first_shared > profile.last_contribution)
      profile.last_contribution = record.first_shared;
    profile.provider = record.provider;
    profile.volume += 1;
    if (record.useful.has_value()) {
      ClassHistory& history =
          profile.history[static_cast<std::size_t>(record.indicator_class)];
      history.total += 1;
      if (*record.useful) history.useful += 1;
    }
  }

  std::map<std::string, double> window_total;
  for (const IndicatorRecord& record : records) {
    // Scores every record, so future-dated feeds fail loudly here.
    const QualityScore score =
        indicator_quality(record, profiles[record.provider], policy.weights,
                          now, policy.half_life_seconds);
    if (age_seconds_between(record.first_shared, now) <=
        policy.window_seconds) {
      profiles[record.provider].window_submissions += 1;
      window_total[record.provider] += score.composite;
    }
  }

  std::vector<ProviderProfile> out;
  for (auto& [name, profile] : profiles) {
    if (profile.window_submissions > 0)
      profile.window_mean_composite =
          window_total[name] / static_cast<double>(profile.window_submissions);
    out.push_back(std::move(profile));
  }
  // std::map iteration left `out` name ordered.
  for (const FreeRiderFlag& flag :
       flag_free_riders(out, policy.min_volume, policy.quality_cutoff)) {
    for (ProviderProfile& profile : out) {
      if (profile.provider != flag.provider) continue;
      profile.free_rider = true;
      profile.reasons = flag.reasons;
    }
  }
  return out;
}

std::vector<FreeRiderFlag> flag_free_riders(
    const std::vector<ProviderProfile>& profiles, std::size_t min_volume,
    double quality_cutoff) {
  std::vector<FreeRiderFlag> flags;
  for (const ProviderProfile& profile : profiles) {
    FreeRiderFlag flag;
    flag.provider = profile.provider;
    if (profile.window_submissions < min_volume)
      flag.reasons.push_back("low-volume");
    if (profile.window_submissions > 0 &&
        profile.window_mean_composite < quality_cutoff)
      flag.reasons.push_back("low-quality");
    if (!flag.reasons.empty()) flags.push_back(std::move(flag));
  }
  return flags;
}

std::string profiles_to_json(const std::vector<ProviderProfile>& profiles) {
  Json out = Json::array();
  for (const ProviderProfile& profile : profiles) {
    Json entry = Json::object();
    entry["provider"] = profile.provider;
    entry["volume"] = profile.volume;
    Json history = Json::object();
    for (std::size_t c = 0; c < kIndicatorClassCount; ++c) {
      if (profile.history[c].total == 0) continue;
      Json counts = Json::object();
      counts["useful"] = profile.history[c].useful;
      counts["total"] = profile.history[c].total;
      history[to_string(static_cast<IndicatorClass>(c))] = std::move(counts);
    }
    entry["history"] = std::move(history);
    if (profile.volume > 0)
      entry["last_contribution"] = format_rfc3339(profile.last_contribution);
    entry["window_submissions"] = profile.window_submissions;
    entry["window_mean_composite"] = profile.window_mean_composite;
    entry["free_rider"] = profile.free_rider;
    entry["reasons"] = profile.reasons;
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

std::string flags_to_json(const std::vector<FreeRiderFlag>& flags) {
  Json out = Json::array();
  for (const FreeRiderFlag& flag : flags) {
    Json entry = Json::object();
    entry["provider"] = flag.provider;
    entry["reasons"] = flag.reasons;
    out.push_back(std::move(entry));
  }
  return out.dump(2) + "\n";
}

}  // namespace ctilint

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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ctilint {

using UtcSeconds =
    std::chrono::time_point<std::chrono::system_clock, std::chrono::seconds>;

// Broken-down UTC instant. `hour` is in [0, 23] after offset normalization.
struct UtcParts {
  int year = 0;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

// Parses an RFC 3339 timestamp ("2001-06-19T08:30:00Z",
// "2001-06-19T08:30:00.5+02:00"). Fractional seconds are discarded; offsets
// are normalized to UTC. Returns nullopt on any deviation.
std::optional<UtcSeconds> parse_rfc3339(std::string_view text);

// Renders an instant as "YYYY-MM-DDThh:mm:ssZ".
std::string format_rfc3339(UtcSeconds when);

UtcParts utc_parts(UtcSeconds when);
UtcSeconds from_utc_parts(const UtcParts& parts);

// Parses a duration with a unit suffix: "7d", "12h", "45m", "30s". A bare
// integer is seconds. Returns nullopt for anything else or non-positive.
std::optional<std::chrono::seconds> parse_duration(std::string_view text);

}  // namespace ctilint

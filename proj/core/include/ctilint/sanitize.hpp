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

#ifndef CTILINT_SANITIZE_HPP_
#define CTILINT_SANITIZE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctilint/document.hpp"
#include "ctilint/registry.hpp"

namespace ctilint {

enum class SanitizeAction {
  kKeep,
  kSuppress,      // empty the value, mark redacted
  kGeneralize,    // coarsen the value, mark generalized
  kPseudonymize,  // keyed one-way token, mark pseudonymized
};

std::string to_string(SanitizeAction action);
SanitizeAction sanitize_action_from_string(const std::string& text);

enum class TimeGranularity { kYear, kMonth, kDay, kHour };

std::string to_string(TimeGranularity granularity);
TimeGranularity time_granularity_from_string(const std::string& text);

struct GeneralizeOptions {
  int ip_prefix_bits = 16;
  TimeGranularity time_granularity = TimeGranularity::kDay;
  long long number_bin_width = 10;
};

struct SanitizePolicy {
  // Action per leak category, indexed by LeakCategory. Public fields are
  // never touched; the default trades identity for linkability: sensitive
  // values coarsen, pii values become keyed pseudonyms.
  std::array<SanitizeAction, kLeakCategoryCount> actions{
      SanitizeAction::kKeep, SanitizeAction::kKeep, SanitizeAction::kGeneralize,
      SanitizeAction::kPseudonymize};
  GeneralizeOptions generalize;
  std::string pseudonym_key = "ctilint";

  SanitizeAction action_for(LeakCategory category) const {
    return actions[static_cast<std::size_t>(category)];
  }
};

// Parses a policy file, a JSON object whose keys are all optional:
//   {"inference":"keep","sensitive":"generalize","pii":"pseudonymize",
//    "key":"...", "ip_prefix_bits":16, "time_granularity":"day",
//    "number_bin_width":10}
// Unknown keys, an action for "public", or out-of-range options are
// SemanticErrors; malformed JSON is a ParseError.
SanitizePolicy sanitize_policy_from_json(const std::string& json_text);

struct SanitizeWarning {
  FieldPath path;
  std::string message;
};

struct SanitizeResult {
  DocumentTree tree;
  std::size_t changed = 0;  // nodes acted on (suppress fallbacks included)
  std::vector<SanitizeWarning> warnings;
};

// Classifies against the rules for standard_id, then applies the policy.
// Elements gain a marker attribute (redacted/generalized/pseudonymized) so
// the action survives a write/parse round trip; attribute values are
// rewritten in place and carry only the in-memory sanitized flag. Nodes
// already sanitized are left alone, so sanitizing twice is a no-op.
SanitizeResult sanitize_document(const DocumentTree& tree,
                                 const Registry& registry,
                                 const std::string& standard_id,
                                 const SanitizePolicy& policy = {});

// Value-level building blocks, exposed for direct use and testing. The
// try_* forms return nullopt when the value does not parse as their type.
std::optional<std::uint32_t> parse_ipv4(const std::string& value);
std::optional<std::string> try_generalize_ip(const std::string& value,
                                             int prefix_bits);
std::optional<std::string> try_generalize_timestamp(
    const std::string& value, TimeGranularity granularity);
std::optional<std::string> try_generalize_number(const std::string& value,
                                                 long long bin_width);

// Auto-detects ip, then timestamp, then integer; nullopt when none apply.
std::optional<std::string> generalize_value(const std::string& value,
                                            const GeneralizeOptions& options);

// "pseud:" followed by 32 hex digits; deterministic per (key, value).
std::string pseudonymize_value(const std::string& value,
                               const std::string& key);

}  // namespace ctilint

#endif  // CTILINT_SANITIZE_HPP_

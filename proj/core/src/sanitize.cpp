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

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>
#include <openssl/hmac.h>

#include "ctilint/errors.hpp"
#include "ctilint/sanitize.hpp"
#include "ctilint/scoring.hpp"
#include "ctilint/timeutil.hpp"

namespace ctilint {

std::optional<std::uint32_t> parse_ipv4(const std::string& value) {
  std::uint32_t address = 0;
  std::size_t pos = 0;
  for (int part = 0; part < 4; ++part) {
    if (part > 0) {
      if (pos >= value.size() || value[pos] != '.') return std::nullopt;
      ++pos;
    }
    if (pos >= value.size() || value[pos] < '0' || value[pos] > '9')
      return std::nullopt;
    std::uint32_t octet = 0;
    std::size_t digits = 0;
    while (pos < value.size() && value[pos] >= '0' && value[pos] <= '9') {
      octet = octet * 10 + static_cast<std::uint32_t>(value[pos] - '0');
      if (octet > 255 || ++digits > 3) return std::nullopt;
      ++pos;
    }
    address = (address << 8) | octet;
  }
  if (pos != value.size()) return std::nullopt;
  return address;
}

namespace {

void add_marker(FieldNode& node, const std::string& marker) {
  for (const FieldNode& child : node.children) {
    if (child.is_attribute() && child.name() == marker) return;
  }
  FieldNode attribute;
  attribute.raw_name = marker;
  attribute.path = node.path.child(marker, true);
  attribute.value = "true";
  attribute.sanitized = true;
  // Attributes sort before element children in document order.
  std::size_t insert_at = 0;
  while (insert_at < node.children.size() &&
         node.children[insert_at].is_attribute())
    ++insert_at;
  node.children.insert(node.children.begin() + insert_at,
                       std::move(attribute));
}

}  // namespace

std::string to_string(SanitizeAction action) {
  switch (action) {
    case SanitizeAction::kKeep: return "keep";
    case SanitizeAction::kSuppress: return "suppress";
    case SanitizeAction::kGeneralize: return "generalize";
    case SanitizeAction::kPseudonymize: return "pseudonymize";
  }
  return "keep";
}

SanitizeAction sanitize_action_from_string(const std::string& text) {
  if (text == "keep") return SanitizeAction::kKeep;
  if (text == "suppress") return SanitizeAction::kSuppress;
  if (text == "generalize") return SanitizeAction::kGeneralize;
  if (text == "pseudonymize") return SanitizeAction::kPseudonymize;
  throw SemanticError("invalid-action", text);
}

std::string to_string(TimeGranularity granularity) {
  switch (granularity) {
    case TimeGranularity::kYear: return "year";
    case TimeGranularity::kMonth: return "month";
    case TimeGranularity::kDay: return "day";
    case TimeGranularity::kHour: return "hour";
  }
  return "day";
}

TimeGranularity time_granularity_from_string(const std::string& text) {
  if (text == "year") return TimeGranularity::kYear;
  if (text == "month") return TimeGranularity::kMonth;
  if (text == "day") return TimeGranularity::kDay;
  if (text == "hour") return TimeGranularity::kHour;
  throw SemanticError("invalid-granularity", text);
}

SanitizePolicy sanitize_policy_from_json(const std::string& json_text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw make_parse_error(e.what(), json_text, offset);
  }
  if (!doc.is_object())
    throw SemanticError("invalid-policy", "policy must be a JSON object");

  SanitizePolicy policy;
  for (const auto& [key, value] : doc.items()) {
    if (auto category = leak_category_from_string(key)) {
      if (*category == LeakCategory::kPublic)
        throw SemanticError("invalid-policy",
                            "public fields take no action");
      if (!value.is_string())
        throw SemanticError("invalid-policy",
                            "action for \"" + key + "\" must be a string");
      policy.actions[static_cast<std::size_t>(*category)] =
          sanitize_action_from_string(value.get<std::string>());
    } else if (key == "key") {
      if (!value.is_string())
        throw SemanticError("invalid-policy", "\"key\" must be a string");
      policy.pseudonym_key = value.get<std::string>();
    } else if (key == "ip_prefix_bits") {
      if (!value.is_number_integer())
        throw SemanticError("invalid-policy",
                            "\"ip_prefix_bits\" must be an integer");
      const int bits = value.get<int>();
      if (bits < 0 || bits > 32)
        throw SemanticError("invalid-prefix",
                            "prefix bits must be between 0 and 32");
      policy.generalize.ip_prefix_bits = bits;
    } else if (key == "time_granularity") {
      if (!value.is_string())
        throw SemanticError("invalid-policy",
                            "\"time_granularity\" must be a string");
      policy.generalize.time_granularity =
          time_granularity_from_string(value.get<std::string>());
    } else if (key == "number_bin_width") {
      if (!value.is_number_integer())
        throw SemanticError("invalid-policy",
                            "\"number_bin_width\" must be an integer");
      const long long width = value.get<long long>();
      if (width <= 0)
        throw SemanticError("invalid-bin-width",
                            "bin width must be positive");
      policy.generalize.number_bin_width = width;
    } else {
      throw SemanticError("invalid-policy", "unknown policy key \"" + key +
                                                "\"");
    }
  }
  return policy;
}

std::optional<std::string> try_generalize_ip(const std::string& value,
                                             int prefix_bits) {
  if (prefix_bits < 0 || prefix_bits > 32)
    throw SemanticError("invalid-prefix",
                        "prefix bits must be between 0 and 32");
  const std::optional<std::uint32_t> address = parse_ipv4(value);
  if (!address) return std::nullopt;
  const std::uint32_t mask =
      prefix_bits == 0 ? 0u : ~std::uint32_t{0} << (32 - prefix_bits);
  const std::uint32_t network = *address & mask;
  char out[32];
  std::snprintf(out, sizeof(out), "%u.%u.%u.%u/%d", network >> 24,
                (network >> 16) & 0xFF, (network >> 8) & 0xFF, network & 0xFF,
                prefix_bits);
  return std::string(out);
}

std::optional<std::string> try_generalize_timestamp(
    const std::string& value, TimeGranularity granularity) {
  const std::optional<UtcSeconds> instant = parse_rfc3339(value);
  if (!instant) return std::nullopt;
  const UtcParts parts = utc_parts(*instant);
  char out[32];
  switch (granularity) {
    case TimeGranularity::kYear:
      std::snprintf(out, sizeof(out), "%04d", parts.year);
      break;
    case TimeGranularity::kMonth:
      std::snprintf(out, sizeof(out), "%04d-%02d", parts.year, parts.month);
      break;
    case TimeGranularity::kDay:
      std::snprintf(out, sizeof(out), "%04d-%02d-%02d", parts.year,
                    parts.month, parts.day);
      break;
    case TimeGranularity::kHour:
      std::snprintf(out, sizeof(out), "%04d-%02d-%02dT%02d", parts.year,
                    parts.month, parts.day, parts.hour);
      break;
  }
  return std::string(out);
}

std::optional<std::string> try_generalize_number(const std::string& value,
                                                 long long bin_width) {
  if (bin_width <= 0)
    throw SemanticError("invalid-bin-width", "bin width must be positive");
  if (value.empty()) return std::nullopt;
  const char* begin = value.c_str();
  char* end = nullptr;
  errno = 0;
  const long long number = std::strtoll(begin, &end, 10);
  if (errno != 0 || end != begin + value.size()) return std::nullopt;
  // Floor division so negatives land in the bin below zero.
  long long low = number / bin_width;
  if (number % bin_width != 0 && number < 0) --low;
  low *= bin_width;
  return std::to_string(low) + ".." + std::to_string(low + bin_width);
}

std::optional<std::string> generalize_value(const std::string& value,
                                            const GeneralizeOptions& options) {
  if (auto ip = try_generalize_ip(value, options.ip_prefix_bits)) return ip;
  if (auto ts = try_generalize_timestamp(value, options.time_granularity))
    return ts;
  return try_generalize_number(value, options.number_bin_width);
}

std::string pseudonymize_value(const std::string& value,
                               const std::string& key) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_size = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
       reinterpret_cast<const unsigned char*>(value.data()), value.size(),
       digest, &digest_size);
  static const char kHex[] = "0123456789abcdef";
  std::string out = "pseud:";
  for (unsigned int i = 0; i < 16 && i < digest_size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

namespace {

const char* marker_for(SanitizeAction action) {
  switch (action) {
    case SanitizeAction::kSuppress: return "redacted";
    case SanitizeAction::kGeneralize: return "generalized";
    case SanitizeAction::kPseudonymize: return "pseudonymized";
    case SanitizeAction::kKeep: break;
  }
  return "";
}

// Inserts markers bottom-up so a parent's insertion never shifts indices or
// references that the subtree walk still needs.
void insert_markers(FieldNode& node, std::size_t& index,
                    const std::vector<const char*>& markers) {
  const std::size_t own = index++;
  const std::size_t child_count = node.children.size();
  for (std::size_t i = 0; i < child_count; ++i)
    insert_markers(node.children[i], index, markers);
  if (markers[own] != nullptr && *markers[own] != '\0')
    add_marker(node, markers[own]);
}

}  // namespace

SanitizeResult sanitize_document(const DocumentTree& tree,
                                 const Registry& registry,
                                 const std::string& standard_id,
                                 const SanitizePolicy& policy) {
  SanitizeResult result;
  result.tree = tree;

  // Classify before mutating so the rewrites below cannot shift categories.
  const std::vector<NodeClassification> classes =
      classify_document(result.tree, registry, standard_id);

  // Pass 1: rewrite values and set flags. No structural changes yet, so the
  // pre-order indices stay aligned with the classification.
  std::vector<const char*> markers(classes.size(), nullptr);
  std::size_t index = 0;
  for_each_node(result.tree, [&](FieldNode& node, std::size_t) {
    const NodeClassification& entry = classes[index];
    const std::size_t own = index++;
    if (node.sanitized || is_sanitizer_marker(node)) return;
    SanitizeAction action = policy.action_for(entry.category);
    if (action == SanitizeAction::kKeep) return;
    if (action != SanitizeAction::kSuppress && node.value.empty()) return;

    if (action == SanitizeAction::kGeneralize) {
      std::optional<std::string> coarse =
          generalize_value(node.value, policy.generalize);
      if (coarse) {
        node.value = std::move(*coarse);
      } else {
        result.warnings.push_back(
            {node.path, "value does not generalize, suppressed instead"});
        action = SanitizeAction::kSuppress;
      }
    }
    if (action == SanitizeAction::kSuppress) {
      node.value.clear();
    } else if (action == SanitizeAction::kPseudonymize) {
      node.value = pseudonymize_value(node.value, policy.pseudonym_key);
    }
    node.sanitized = true;
    if (!node.is_attribute()) markers[own] = marker_for(action);
    result.changed += 1;
  });

  // Pass 2: attach marker attributes, children before parents.
  std::size_t walk_index = 0;
  for (FieldNode& root : result.tree.roots)
    insert_markers(root, walk_index, markers);
  return result;
}

}  // namespace ctilint

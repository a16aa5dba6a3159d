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
#include <array>
#include <cctype>
#include <string_view>

#include "ctilint/ingest.hpp"

namespace ctilint {

namespace {

std::string lowercase(std::string_view in) {
  std::string out(in);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

struct RootNameEntry {
  std::string_view root;
  std::string_view standard;
};

// Distinctive root element names, checked before namespace URIs. Matching is
// case-insensitive so JSON-shaped documents with lowercased keys still hit.
constexpr std::array<RootNameEntry, 9> kRootNames{{
    {"iodef-document", "iodef"},
    {"stix_package", "stix"},
    {"maec_package", "maec"},
    {"package", "maec"},
    {"observables", "cybox"},
    {"observable", "cybox"},
    {"oval_definitions", "oval"},
    {"benchmark", "xccdf"},
    {"cee", "cee"},
}};

// Checked in order: the multi-field languages first so that a STIX bundle
// embedding CybOX observables reports stix, not cybox.
constexpr std::array<std::string_view, 12> kNamespaceTokens{
    "iodef", "stix", "maec", "cybox", "oval", "xccdf",
    "cee",   "capec", "cce",  "cpe",   "cve",  "cwe",
};

}  // namespace

std::string detect_standard(const DocumentTree& tree) {
  if (!tree.roots.empty()) {
    const std::string root = lowercase(tree.roots.front().name());
    for (const RootNameEntry& entry : kRootNames) {
      if (root == entry.root) return std::string(entry.standard);
    }
  }
  for (std::string_view token : kNamespaceTokens) {
    for (const auto& [prefix, uri] : tree.declared_namespaces) {
      if (lowercase(uri).find(token) != std::string::npos)
        return std::string(token);
    }
  }
  return "unknown";
}

}  // namespace ctilint

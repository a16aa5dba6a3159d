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

#include <sstream>

#include "ctilint/ingest.hpp"

namespace ctilint {

namespace {

std::string escape_text(const std::string& in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(const std::string& in) {
  std::string out;
  out.reserve(in.size());
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_node(std::ostringstream& out, const FieldNode& node, int indent,
                const DocumentTree* tree_for_xmlns) {
  const std::string pad(2 * static_cast<std::size_t>(indent), ' ');
  out << pad << '<' << node.raw_name;
  if (tree_for_xmlns != nullptr) {
    for (const auto& [prefix, uri] : tree_for_xmlns->declared_namespaces) {
      out << ' ' << (prefix.empty() ? "xmlns" : "xmlns:" + prefix) << "=\""
          << escape_attribute(uri) << '"';
    }
  }

  std::vector<const FieldNode*> elements;
  for (const FieldNode& child : node.children) {
    if (child.is_attribute())
      out << ' ' << child.raw_name << "=\"" << escape_attribute(child.value)
          << '"';
    else
      elements.push_back(&child);
  }

  if (elements.empty() && node.value.empty()) {
    out << "/>\n";
    return;
  }
  out << '>';
  if (elements.empty()) {
    out << escape_text(node.value) << "</" << node.raw_name << ">\n";
    return;
  }
  out << '\n';
  if (!node.value.empty())
    out << pad << "  " << escape_text(node.value) << '\n';
  for (const FieldNode* child : elements)
    write_node(out, *child, indent + 1, nullptr);
  out << pad << "</" << node.raw_name << ">\n";
}

}  // namespace

std::string write_xml(const DocumentTree& tree) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  bool first = true;
  for (const FieldNode& root : tree.roots) {
    write_node(out, root, 0, first ? &tree : nullptr);
    first = false;
  }
  return out.str();
}

}  // namespace ctilint

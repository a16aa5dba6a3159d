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

#include "ctilint/document.hpp"

#include <cctype>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"

namespace ctilint {

namespace {

void collect(const FieldNode& node, std::vector<const FieldNode*>& out) {
  out.push_back(&node);
  for (const FieldNode& child : node.children) collect(child, out);
}

void walk(FieldNode& node, std::size_t& index,
          const std::function<void(FieldNode&, std::size_t)>& visit) {
  visit(node, index++);
  for (FieldNode& child : node.children) walk(child, index, visit);
}

std::size_t count_nodes(const FieldNode& node) {
  std::size_t total = 1;
  for (const FieldNode& child : node.children) total += count_nodes(child);
  return total;
}

}  // namespace

std::size_t DocumentTree::node_count() const {
  std::size_t total = 0;
  for (const FieldNode& root : roots) total += count_nodes(root);
  return total;
}

std::vector<const FieldNode*> enumerate_fields(const DocumentTree& tree) {
  std::vector<const FieldNode*> out;
  out.reserve(tree.node_count());
  for (const FieldNode& root : tree.roots) collect(root, out);
  return out;
}

void for_each_node(DocumentTree& tree,
                   const std::function<void(FieldNode&, std::size_t)>& visit) {
  std::size_t index = 0;
  for (FieldNode& root : tree.roots) walk(root, index, visit);
}

bool tree_equal(const DocumentTree& a, const DocumentTree& b) {
  const auto nodes_a = enumerate_fields(a);
  const auto nodes_b = enumerate_fields(b);
  if (nodes_a.size() != nodes_b.size()) return false;
  for (std::size_t i = 0; i < nodes_a.size(); ++i) {
    if (nodes_a[i]->path != nodes_b[i]->path) return false;
    if (nodes_a[i]->value != nodes_b[i]->value) return false;
  }
  return true;
}

bool is_sanitizer_marker(const FieldNode& node) {
  if (!node.is_attribute() || node.value != "true") return false;
  const std::string& name = node.name();
  return name == "redacted" || name == "generalized" ||
         name == "pseudonymized";
}

DocumentFormat sniff_format(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '<') return DocumentFormat::kXml;
    if (c == '{' || c == '[') return DocumentFormat::kJson;
    throw make_parse_error("unrecognized document format", text, i);
  }
  throw make_parse_error("empty document", text, 0);
}

DocumentTree parse_document(const std::string& text,
                            const std::string& origin) {
  return sniff_format(text) == DocumentFormat::kXml
             ? parse_xml(text, origin)
             : parse_json_document(text, origin);
}

}  // namespace ctilint

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

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ctilint/field_path.hpp"

namespace ctilint {

// Half-open byte range [begin, end) into the original input.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SourceSpan&) const = default;
};

enum class DocumentFormat { kXml, kJson };

// One field of a parsed document: an element or an attribute. Attribute
// nodes have no children and precede element children in `children`.
struct FieldNode {
  FieldPath path;        // full path from the root; leaf() is this node
  std::string raw_name;  // name as written, possibly namespace-prefixed
  std::string value;     // trimmed text content, or the attribute value
  std::vector<FieldNode> children;
  SourceSpan span;
  // Set when a sanitizer or partitioner removed/rewrote the value. Element
  // nodes also carry a marker attribute so the state survives
  // re-serialization; attribute nodes keep the flag in memory only.
  bool sanitized = false;

  const std::string& name() const { return path.leaf().name; }
  bool is_attribute() const { return path.leaf().is_attribute; }
};

// A parsed document. XML documents have exactly one root; JSON documents may
// have several (top-level arrays and multi-key objects).
struct DocumentTree {
  std::vector<FieldNode> roots;
  // Declared namespace prefixes, prefix -> URI, sorted by prefix. The
  // default namespace uses prefix "".
  std::vector<std::pair<std::string, std::string>> declared_namespaces;
  std::string origin;  // file path or a caller-supplied label
  DocumentFormat format = DocumentFormat::kXml;

  std::size_t node_count() const;
};

// Pre-order enumeration of every node, attributes included. Deterministic
// for a given tree.
std::vector<const FieldNode*> enumerate_fields(const DocumentTree& tree);

// Pre-order walk with mutation access; `visit` gets each node and its
// pre-order index.
void for_each_node(DocumentTree& tree,
                   const std::function<void(FieldNode&, std::size_t)>& visit);

// Structural equality over paths and values (spans, raw names, and
// namespace declarations are presentation detail and do not participate).
bool tree_equal(const DocumentTree& a, const DocumentTree& b);

// True for the bookkeeping attributes the sanitizer attaches (redacted,
// generalized, pseudonymized with value "true"). Classification treats these
// as public so a sanitized document never scores worse than the original.
bool is_sanitizer_marker(const FieldNode& node);

// Sniffs a document format: first non-whitespace byte '<' means XML,
// '{' or '[' means JSON. Throws ParseError otherwise.
DocumentFormat sniff_format(const std::string& text);

// Dispatches to the XML or JSON reader based on sniff_format.
DocumentTree parse_document(const std::string& text, const std::string& origin);

}  // namespace ctilint

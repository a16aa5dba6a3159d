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

#include <string>

#include "ctilint/document.hpp"

namespace ctilint {

// Parses the supported XML subset: declaration, elements, attributes, text,
// CDATA, comments, predefined and numeric character references. Namespace
// prefixes are recorded in the tree and stripped from path segments; xmlns
// declarations become declared_namespaces entries, not nodes. DOCTYPE and
// processing instructions raise UnsupportedConstructError; anything
// malformed raises ParseError with the byte offset. External input is never
// fetched.
DocumentTree parse_xml(const std::string& text, const std::string& origin);

// Re-serializes a tree as XML. The inverse of parse_xml up to whitespace:
// parse_xml(write_xml(t)) is tree_equal to t.
std::string write_xml(const DocumentTree& tree);

// Parses a JSON document into a field tree: object keys become element
// segments (keys starting with '@' become attribute segments), array
// elements repeat the parent segment, scalars become node values rendered
// as text. A top-level array uses segment "item", a top-level scalar
// "value". Nodes carrying both a value and children render the value under
// the "#text" key.
DocumentTree parse_json_document(const std::string& text,
                                 const std::string& origin);

// Re-serializes a tree as JSON (all scalars as strings). The inverse of
// parse_json_document at tree level.
std::string write_json_document(const DocumentTree& tree);

// Identifies the sharing standard of a parsed document from its root name,
// falling back to declared-namespace URIs. Returns the registry id or
// "unknown". Pure; never consults the network.
std::string detect_standard(const DocumentTree& tree);

}  // namespace ctilint

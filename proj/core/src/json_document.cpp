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

#include <nlohmann/json.hpp>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"

namespace ctilint {

namespace {

using Json = nlohmann::ordered_json;

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

void build_node(const std::string& name, const Json& value,
                const FieldPath& parent_path, std::vector<FieldNode>& out);

void build_object(FieldNode& node, const Json& object) {
  for (const auto& [key, value] : object.items()) {
    if (key == "#text") {
      if (value.is_object() || value.is_array())
        throw SemanticError("invalid-json-shape",
                            "\"#text\" must hold a scalar");
      node.value = scalar_text(value);
      continue;
    }
    if (!key.empty() && key[0] == '@') {
      if (value.is_object() || value.is_array())
        throw SemanticError("invalid-json-shape",
                            "attribute key \"" + key + "\" must hold a scalar");
      FieldNode attribute;
      attribute.raw_name = key;
      attribute.path = node.path.child(key.substr(1), true);
      attribute.value = scalar_text(value);
      node.children.push_back(std::move(attribute));
      continue;
    }
    build_node(key, value, node.path, node.children);
  }
}

// One JSON key/value pair becomes one node, or several when the value is an
// array: arrays repeat the key, they do not introduce a path segment.
void build_node(const std::string& name, const Json& value,
                const FieldPath& parent_path, std::vector<FieldNode>& out) {
  if (value.is_array()) {
    for (const Json& item : value) build_node(name, item, parent_path, out);
    return;
  }
  FieldNode node;
  node.raw_name = name;
  node.path = parent_path.empty()
                  ? FieldPath({PathSegment{name, false}})
                  : parent_path.child(name);
  if (value.is_object())
    build_object(node, value);
  else
    node.value = scalar_text(value);
  out.push_back(std::move(node));
}

Json node_to_json(const FieldNode& node);

// Children serialize to object entries; consecutive element children with the
// same name collapse into one array entry.
Json children_to_json(const FieldNode& node) {
  Json object = Json::object();
  if (!node.value.empty()) object["#text"] = node.value;
  std::size_t i = 0;
  while (i < node.children.size()) {
    const FieldNode& child = node.children[i];
    if (child.is_attribute()) {
      object["@" + child.name()] = child.value;
      ++i;
      continue;
    }
    std::size_t run = i + 1;
    while (run < node.children.size() &&
           !node.children[run].is_attribute() &&
           node.children[run].name() == child.name())
      ++run;
    if (run - i == 1) {
      object[child.name()] = node_to_json(child);
    } else {
      Json array = Json::array();
      for (std::size_t j = i; j < run; ++j)
        array.push_back(node_to_json(node.children[j]));
      object[child.name()] = std::move(array);
    }
    i = run;
  }
  return object;
}

Json node_to_json(const FieldNode& node) {
  if (node.children.empty()) return Json(node.value);
  return children_to_json(node);
}

}  // namespace

DocumentTree parse_json_document(const std::string& text,
                                 const std::string& origin) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw make_parse_error(e.what(), text, offset);
  }

  DocumentTree tree;
  tree.origin = origin;
  tree.format = DocumentFormat::kJson;
  if (parsed.is_object()) {
    FieldPath no_parent;
    for (const auto& [key, value] : parsed.items()) {
      if (!key.empty() && key[0] == '@')
        throw SemanticError("invalid-json-shape",
                            "attribute key \"" + key + "\" at top level");
      if (key == "#text")
        throw SemanticError("invalid-json-shape", "\"#text\" at top level");
      build_node(key, value, no_parent, tree.roots);
    }
  } else if (parsed.is_array()) {
    FieldPath no_parent;
    for (const Json& item : parsed)
      build_node("item", item, no_parent, tree.roots);
  } else {
    FieldPath no_parent;
    build_node("value", parsed, no_parent, tree.roots);
  }
  return tree;
}

std::string write_json_document(const DocumentTree& tree) {
  Json object = Json::object();
  std::size_t i = 0;
  while (i < tree.roots.size()) {
    const FieldNode& root = tree.roots[i];
    std::size_t run = i + 1;
    while (run < tree.roots.size() && tree.roots[run].name() == root.name())
      ++run;
    if (run - i == 1) {
      object[root.name()] = node_to_json(root);
    } else {
      Json array = Json::array();
      for (std::size_t j = i; j < run; ++j)
        array.push_back(node_to_json(tree.roots[j]));
      object[root.name()] = std::move(array);
    }
    i = run;
  }
  return object.dump(2) + "\n";
}

}  // namespace ctilint

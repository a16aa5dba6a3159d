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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"
#include "ctilint/partition.hpp"
#include "ctilint/scoring.hpp"

namespace ctilint {

namespace {

using Json = nlohmann::ordered_json;

std::vector<FieldNode*> collect_nodes(DocumentTree& tree) {
  std::vector<FieldNode*> nodes;
  nodes.reserve(tree.node_count());
  for_each_node(tree, [&](FieldNode& node, std::size_t) {
    nodes.push_back(&node);
  });
  return nodes;
}

[[noreturn]] void bad_hole(const HoleRef& hole, const std::string& why) {
  throw IntegrityError("hole " + hole.path.to_string() + ": " + why);
}

// Checks a hole against the skeleton before any value moves.
void validate_hole(const HoleRef& hole,
                   const std::vector<FieldNode*>& nodes) {
  if (hole.node_index >= nodes.size())
    bad_hole(hole, "node index " + std::to_string(hole.node_index) +
                       " is out of range");
  if (!(nodes[hole.node_index]->path == hole.path))
    bad_hole(hole, "skeleton node at index " +
                       std::to_string(hole.node_index) + " has path " +
                       nodes[hole.node_index]->path.to_string());
}

void add_redacted_marker(FieldNode& node) {
  for (const FieldNode& child : node.children) {
    if (child.is_attribute() && child.name() == "redacted") return;
  }
  FieldNode attribute;
  attribute.raw_name = "redacted";
  attribute.path = node.path.child("redacted", true);
  attribute.value = "true";
  attribute.sanitized = true;
  std::size_t insert_at = 0;
  while (insert_at < node.children.size() &&
         node.children[insert_at].is_attribute())
    ++insert_at;
  node.children.insert(node.children.begin() + insert_at,
                       std::move(attribute));
}

enum class HoleAction : std::uint8_t { kNone, kMark, kRemove };

// Walks the original pre-order, then mutates bottom-up: child removals and
// marker insertions happen only after the subtree's indices were consumed.
// Returns true when the node itself must leave the view.
bool apply_hole_actions(FieldNode& node, std::size_t& index,
                        const std::vector<HoleAction>& actions) {
  const std::size_t own = index++;
  std::vector<std::size_t> doomed;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (apply_hole_actions(node.children[i], index, actions))
      doomed.push_back(i);
  }
  for (auto it = doomed.rbegin(); it != doomed.rend(); ++it)
    node.children.erase(node.children.begin() + *it);
  if (actions[own] == HoleAction::kMark) {
    add_redacted_marker(node);
    node.sanitized = true;
  }
  return actions[own] == HoleAction::kRemove;
}

std::string category_file(const DocumentTree& skeleton,
                          LeakCategory category) {
  const char* ext =
      skeleton.format == DocumentFormat::kXml ? ".xml" : ".json";
  return std::string(to_string(category)) + ext;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw SemanticError("io-error", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw SemanticError("io-error", "cannot open " + path.string());
  out << text;
  if (!out)
    throw SemanticError("io-error", "cannot write " + path.string());
}

}  // namespace

CategorySet CategorySet::up_to(LeakCategory max) {
  CategorySet set;
  for (int c = 0; c <= static_cast<int>(max); ++c)
    set.included[static_cast<std::size_t>(c)] = true;
  return set;
}

PartitionedDocument partition_document(const DocumentTree& tree,
                                       const Registry& registry,
                                       const std::string& standard_id) {
  PartitionedDocument part;
  part.skeleton = tree;
  part.standard_id = standard_id;

  const std::vector<NodeClassification> classes =
      classify_document(part.skeleton, registry, standard_id);

  std::size_t index = 0;
  for_each_node(part.skeleton, [&](FieldNode& node, std::size_t) {
    const NodeClassification& entry = classes[index];
    const std::size_t own = index++;
    if (entry.category == LeakCategory::kPublic) return;
    auto& payload = part.values[static_cast<std::size_t>(entry.category)];
    HoleRef hole;
    hole.node_index = own;
    hole.path = node.path;
    hole.category = entry.category;
    hole.ordinal = payload.size();
    payload.push_back(std::move(node.value));
    node.value.clear();
    part.holes.push_back(std::move(hole));
  });
  return part;
}

DocumentTree merge_partition(const PartitionedDocument& part,
                             const CategorySet& included) {
  DocumentTree tree = part.skeleton;
  const std::vector<FieldNode*> nodes = collect_nodes(tree);
  for (const HoleRef& hole : part.holes) {
    validate_hole(hole, nodes);
    if (!included.contains(hole.category)) continue;
    const auto& payload = part.values[static_cast<std::size_t>(hole.category)];
    if (hole.ordinal >= payload.size())
      bad_hole(hole, "missing " + std::string(to_string(hole.category)) +
                         " value " + std::to_string(hole.ordinal));
    nodes[hole.node_index]->value = payload[hole.ordinal];
  }
  return tree;
}

TierPolicy TierPolicy::default_policy() {
  return TierPolicy{{{"public", LeakCategory::kInference},
                     {"vetted", LeakCategory::kSensitive},
                     {"trusted", LeakCategory::kPii}}};
}

LeakCategory TierPolicy::max_for(const std::string& audience) const {
  for (const TierRule& tier : tiers) {
    if (tier.audience == audience) return tier.max_category;
  }
  throw SemanticError("unknown-audience", audience);
}

DocumentTree tier_view(const PartitionedDocument& part,
                       const TierPolicy& policy, const std::string& audience) {
  const CategorySet included = CategorySet::up_to(policy.max_for(audience));
  DocumentTree tree = merge_partition(part, included);

  // Withheld element holes are kept as redacted husks so the document shape
  // stays recognizable; withheld attribute holes are dropped outright (an
  // attribute cannot carry a marker, and an empty one would still classify).
  std::vector<HoleAction> actions(tree.node_count(), HoleAction::kNone);
  {
    std::size_t index = 0;
    std::vector<bool> is_attribute(tree.node_count(), false);
    for_each_node(tree, [&](FieldNode& node, std::size_t) {
      is_attribute[index++] = node.is_attribute();
    });
    for (const HoleRef& hole : part.holes) {
      if (included.contains(hole.category)) continue;
      actions[hole.node_index] = is_attribute[hole.node_index]
                                     ? HoleAction::kRemove
                                     : HoleAction::kMark;
    }
  }
  std::size_t index = 0;
  std::vector<std::size_t> doomed_roots;
  for (std::size_t i = 0; i < tree.roots.size(); ++i) {
    if (apply_hole_actions(tree.roots[i], index, actions))
      doomed_roots.push_back(i);
  }
  for (auto it = doomed_roots.rbegin(); it != doomed_roots.rend(); ++it)
    tree.roots.erase(tree.roots.begin() + *it);
  return tree;
}

void write_partition(const std::string& directory,
                     const PartitionedDocument& part) {
  const std::filesystem::path base(directory);
  std::filesystem::create_directories(base);

  for (std::size_t c = 0; c < kLeakCategoryCount; ++c) {
    const auto category = static_cast<LeakCategory>(c);
    CategorySet only;
    only.included[c] = category != LeakCategory::kPublic;
    DocumentTree view = merge_partition(part, only);
    const std::string text = view.format == DocumentFormat::kXml
                                 ? write_xml(view)
                                 : write_json_document(view);
    write_file(base / category_file(part.skeleton, category), text);
  }

  Json index = Json::object();
  index["origin"] = part.skeleton.origin;
  index["standard"] = part.standard_id;
  index["format"] =
      part.skeleton.format == DocumentFormat::kXml ? "xml" : "json";
  Json holes = Json::array();
  for (const HoleRef& hole : part.holes) {
    Json entry = Json::object();
    entry["node"] = hole.node_index;
    entry["path"] = hole.path.to_string();
    entry["category"] = to_string(hole.category);
    entry["ordinal"] = hole.ordinal;
    holes.push_back(std::move(entry));
  }
  index["holes"] = std::move(holes);
  write_file(base / "index.json", index.dump(2) + "\n");
}

PartitionedDocument read_partition(const std::string& directory) {
  const std::filesystem::path base(directory);
  const std::string index_text = read_file(base / "index.json");
  Json index;
  try {
    index = Json::parse(index_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw make_parse_error(e.what(), index_text, e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!index.is_object() || !index.contains("format") ||
      !index.contains("holes") || !index["holes"].is_array())
    throw IntegrityError("index.json is not a partition index");

  PartitionedDocument part;
  part.standard_id = index.value("standard", std::string("unknown"));
  const bool xml = index["format"] == "xml";
  const char* ext = xml ? ".xml" : ".json";

  const std::string skeleton_text = read_file(base / ("public" + std::string(ext)));
  part.skeleton = xml ? parse_xml(skeleton_text, index.value("origin", ""))
                      : parse_json_document(skeleton_text,
                                            index.value("origin", ""));

  for (const Json& entry : index["holes"]) {
    if (!entry.is_object() || !entry.contains("node") ||
        !entry.contains("path") || !entry.contains("category") ||
        !entry.contains("ordinal"))
      throw IntegrityError("malformed hole entry in index.json");
    HoleRef hole;
    hole.node_index = entry["node"].get<std::size_t>();
    hole.path = FieldPath::parse(entry["path"].get<std::string>());
    const std::optional<LeakCategory> category =
        leak_category_from_string(entry["category"].get<std::string>());
    if (!category)
      throw IntegrityError("unknown category in index.json hole entry");
    hole.category = *category;
    hole.ordinal = entry["ordinal"].get<std::size_t>();
    part.holes.push_back(std::move(hole));
  }

  // Pull each category's payloads back out of its file.
  std::vector<FieldNode*> skeleton_nodes = collect_nodes(part.skeleton);
  for (std::size_t c = 1; c < kLeakCategoryCount; ++c) {
    const auto category = static_cast<LeakCategory>(c);
    const std::string text =
        read_file(base / (to_string(category) + std::string(ext)));
    DocumentTree view = xml ? parse_xml(text, "")
                            : parse_json_document(text, "");
    std::vector<FieldNode*> nodes = collect_nodes(view);
    auto& payload = part.values[static_cast<std::size_t>(category)];
    for (const HoleRef& hole : part.holes) {
      if (hole.category != category) continue;
      if (hole.node_index >= nodes.size())
        bad_hole(hole, "node index " + std::to_string(hole.node_index) +
                           " is out of range");
      if (!(nodes[hole.node_index]->path == hole.path))
        bad_hole(hole, "category file node has path " +
                           nodes[hole.node_index]->path.to_string());
      if (hole.ordinal != payload.size())
        bad_hole(hole, "ordinal " + std::to_string(hole.ordinal) +
                           " is out of order");
      payload.push_back(nodes[hole.node_index]->value);
    }
  }

  // The skeleton must really be hollow where the index says it is.
  for (const HoleRef& hole : part.holes) validate_hole(hole, skeleton_nodes);
  return part;
}

}  // namespace ctilint

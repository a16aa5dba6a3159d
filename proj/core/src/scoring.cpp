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
#include <set>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"
#include "ctilint/scoring.hpp"

namespace ctilint {

namespace {

struct CompiledRule {
  const FieldRule* rule;
  PathPattern pattern;
  std::size_t specificity;  // segment count of the pattern
};

std::vector<CompiledRule> compile_rules(const Registry& registry,
                                        const std::string& standard_id) {
  std::vector<CompiledRule> compiled;
  for (const FieldRule* rule : registry.rules_for(standard_id)) {
    PathPattern pattern = PathPattern::parse(rule->pattern);
    const std::size_t specificity = pattern.size();
    compiled.push_back({rule, std::move(pattern), specificity});
  }
  return compiled;
}

const FieldRule* direct_match(const std::vector<CompiledRule>& rules,
                              const FieldPath& path) {
  const CompiledRule* best = nullptr;
  for (const CompiledRule& candidate : rules) {
    if (!candidate.pattern.matches(path)) continue;
    if (best == nullptr || candidate.specificity > best->specificity ||
        (candidate.specificity == best->specificity &&
         candidate.rule->category > best->rule->category))
      best = &candidate;
  }
  return best == nullptr ? nullptr : best->rule;
}

struct Inherited {
  const FieldRule* rule = nullptr;
};

bool carries_marker(const FieldNode& node) {
  for (const FieldNode& child : node.children) {
    if (is_sanitizer_marker(child)) return true;
  }
  return false;
}

void classify_walk(const FieldNode& node,
                   const std::vector<CompiledRule>& rules, Inherited inherited,
                   std::vector<NodeClassification>& out) {
  const FieldRule* own = direct_match(rules, node.path);

  NodeClassification entry;
  // A marker child stands in for the sanitized flag after a write/parse
  // round trip, when the in-memory flag has been lost.
  if (node.sanitized || is_sanitizer_marker(node) || carries_marker(node)) {
    // Sanitized content and sanitizer bookkeeping read as public.
    entry.category = LeakCategory::kPublic;
  } else if (own != nullptr) {
    entry.category = own->category;
    entry.rule = own;
  } else if (inherited.rule != nullptr) {
    entry.category = inherited.rule->category;
    entry.rule = inherited.rule;
    entry.inherited = true;
  }
  out.push_back(entry);

  // The node's own match flows down even when the node itself is sanitized:
  // masking a value says nothing about the children underneath it.
  Inherited next = inherited;
  if (own != nullptr) next.rule = own;
  for (const FieldNode& child : node.children)
    classify_walk(child, rules, next, out);
}

}  // namespace

std::string to_string(ScoringMode mode) {
  return mode == ScoringMode::kPerOccurrence ? "per-occurrence"
                                             : "per-distinct-field";
}

ScoringMode scoring_mode_from_string(const std::string& text) {
  if (text == "per-occurrence") return ScoringMode::kPerOccurrence;
  if (text == "per-distinct-field") return ScoringMode::kPerDistinctField;
  throw SemanticError("invalid-scoring-mode", text);
}

std::vector<NodeClassification> classify_document(
    const DocumentTree& tree, const Registry& registry,
    const std::string& standard_id) {
  const std::vector<CompiledRule> rules = compile_rules(registry, standard_id);
  std::vector<NodeClassification> out;
  out.reserve(tree.node_count());
  for (const FieldNode& root : tree.roots)
    classify_walk(root, rules, Inherited{}, out);
  return out;
}

DocumentScore score_document(const DocumentTree& tree,
                             const Registry& registry,
                             const std::string& standard_id, ScoringMode mode,
                             const WeightProfile* weights) {
  const WeightProfile& profile =
      weights != nullptr ? *weights : registry.default_weights;

  DocumentScore score;
  score.origin = tree.origin;
  score.standard_id = standard_id;
  score.mode = mode;

  const std::vector<NodeClassification> classes =
      classify_document(tree, registry, standard_id);
  const std::vector<const FieldNode*> nodes = enumerate_fields(tree);

  std::set<std::string> seen_paths;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeClassification& entry = classes[i];
    if (entry.category == LeakCategory::kPublic) continue;

    FieldFinding finding;
    finding.path = nodes[i]->path;
    finding.value = nodes[i]->value;
    finding.category = entry.category;
    finding.pattern = entry.rule->pattern;
    finding.inherited = entry.inherited;
    finding.span = nodes[i]->span;
    score.findings.push_back(std::move(finding));

    if (mode == ScoringMode::kPerDistinctField &&
        !seen_paths.insert(nodes[i]->path.to_string()).second)
      continue;
    score.counts[static_cast<std::size_t>(entry.category)] += 1;
    score.total += profile.weight(entry.category);
  }
  return score;
}

CorpusScore score_corpus(const std::vector<CorpusItem>& items,
                         const Registry& registry, ScoringMode mode,
                         const WeightProfile* weights) {
  CorpusScore result;
  for (const CorpusItem& item : items) {
    try {
      DocumentTree tree = parse_document(item.text, item.origin);
      std::string standard = item.standard_id;
      if (standard.empty()) {
        standard = detect_standard(tree);
        // An explicit "unknown" is honored; a failed detection is an error.
        if (standard == "unknown")
          throw SemanticError("unknown-standard",
                              "cannot detect the document's standard");
      }
      result.documents.push_back(
          score_document(tree, registry, standard, mode, weights));
    } catch (const Error& e) {
      result.errors.push_back({item.origin, e.what()});
    }
  }
  auto by_origin = [](const auto& a, const auto& b) {
    return a.origin < b.origin;
  };
  std::stable_sort(result.documents.begin(), result.documents.end(),
                   by_origin);
  std::stable_sort(result.errors.begin(), result.errors.end(), by_origin);
  return result;
}

}  // namespace ctilint

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

#ifndef CTILINT_PARTITION_HPP_
#define CTILINT_PARTITION_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ctilint/document.hpp"
#include "ctilint/registry.hpp"

namespace ctilint {

// One removed value: which skeleton node it came from (pre-order index),
// its category, and its position in that category's value vector.
struct HoleRef {
  std::size_t node_index = 0;
  FieldPath path;
  LeakCategory category = LeakCategory::kPublic;
  std::size_t ordinal = 0;
};

struct PartitionedDocument {
  DocumentTree skeleton;  // non-public values blanked, public values inline
  std::array<std::vector<std::string>, kLeakCategoryCount> values;
  std::vector<HoleRef> holes;  // tree order
  std::string standard_id;
};

// Classifies the document and pulls every non-public value out of the tree.
PartitionedDocument partition_document(const DocumentTree& tree,
                                       const Registry& registry,
                                       const std::string& standard_id);

struct CategorySet {
  std::array<bool, kLeakCategoryCount> included{};

  // Public plus everything up to and including max.
  static CategorySet up_to(LeakCategory max);
  bool contains(LeakCategory category) const {
    return included[static_cast<std::size_t>(category)];
  }
};

// Restores the values of the included categories into a copy of the
// skeleton. Excluded holes stay empty. Throws IntegrityError naming the
// hole when a hole does not line up with the skeleton or its payload is
// missing.
DocumentTree merge_partition(
    const PartitionedDocument& part,
    const CategorySet& included = CategorySet::up_to(LeakCategory::kPii));

struct TierRule {
  std::string audience;
  LeakCategory max_category = LeakCategory::kPublic;
};

struct TierPolicy {
  std::vector<TierRule> tiers;

  // public -> inference, vetted -> sensitive, trusted -> pii.
  static TierPolicy default_policy();
  // Throws SemanticError("unknown-audience") when absent.
  LeakCategory max_for(const std::string& audience) const;
};

// The audience's view: included values restored, withheld element holes
// marked redacted so the omission is visible. Withheld attribute holes are
// removed from the view entirely (attributes cannot carry markers, and an
// empty attribute would still read as the field being present). A view never
// classifies anything above the audience's ceiling.
DocumentTree tier_view(const PartitionedDocument& part,
                       const TierPolicy& policy, const std::string& audience);

// Disk layout inside the directory: public.<ext>, inference.<ext>,
// sensitive.<ext>, pii.<ext> and index.json, where <ext> matches the source
// format. Every category file is the full skeleton with only that
// category's hole values filled in; index.json records the holes.
void write_partition(const std::string& directory,
                     const PartitionedDocument& part);
PartitionedDocument read_partition(const std::string& directory);

}  // namespace ctilint

#endif  // CTILINT_PARTITION_HPP_

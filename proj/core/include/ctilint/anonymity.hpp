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

#ifndef CTILINT_ANONYMITY_HPP_
#define CTILINT_ANONYMITY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ctilint/record_table.hpp"

namespace ctilint {

struct AnonymityCheck {
  bool satisfied = true;
  std::size_t class_count = 0;
  std::size_t smallest_class = 0;     // 0 when the table has no rows
  std::size_t violating_rows = 0;     // rows inside failing classes
};

// k-anonymity over the quasi-identifier columns: every equivalence class
// (rows equal on all qi columns) has at least k rows. An empty table is
// vacuously anonymous; k must be positive.
AnonymityCheck check_k_anonymity(const RecordTable& table,
                                 const std::vector<std::size_t>& qi_columns,
                                 std::size_t k);

// Distinct l-diversity: every equivalence class carries at least l distinct
// values in the sensitive column. In the result, smallest_class holds the
// smallest per-class distinct count, not the smallest class size.
AnonymityCheck check_l_diversity(const RecordTable& table,
                                 const std::vector<std::size_t>& qi_columns,
                                 std::size_t sensitive_column, std::size_t l);

// Generalization ladders, one step per level:
//   number exact -> width 10 bins -> width 100 bins -> "*"
//   timestamp exact -> day -> month -> year -> "*"
//   ip exact -> /24 -> /16 -> /8 -> "*"
//   text exact -> first character -> "*"
// Nonempty cells that do not parse as the column type jump straight to "*".
std::size_t ladder_height(ColumnType type);
std::string apply_ladder(const std::string& value, ColumnType type,
                         std::size_t level);

struct AnonymizeResult {
  RecordTable table;
  std::vector<std::size_t> levels;  // final ladder level per qi column
  // Levels after each greedy step; per-column values never decrease.
  std::vector<std::vector<std::size_t>> level_trace;
  std::size_t suppressed_rows = 0;
  std::vector<std::string> warnings;
};

// Global recoding: repeatedly bump the qi column whose next ladder step
// leaves the fewest rows in under-k classes (ties go to the leftmost
// column) until the table is k-anonymous, then suppress any rows still in
// violating classes. Asking for k above the row count suppresses everything.
AnonymizeResult enforce_k_anonymity(const RecordTable& table,
                                    const std::vector<std::size_t>& qi_columns,
                                    std::size_t k);

}  // namespace ctilint

#endif  // CTILINT_ANONYMITY_HPP_

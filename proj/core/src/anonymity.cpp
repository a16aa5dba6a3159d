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
#include <limits>
#include <map>
#include <set>

#include "ctilint/anonymity.hpp"
#include "ctilint/errors.hpp"
#include "ctilint/sanitize.hpp"

namespace ctilint {

namespace {

void validate_columns(const RecordTable& table,
                      const std::vector<std::size_t>& columns) {
  for (std::size_t column : columns) {
    if (column >= table.column_count())
      throw SemanticError("unknown-column", std::to_string(column));
  }
}

// Equivalence class key: qi cells joined with an unlikely separator.
std::string class_key(const std::vector<std::string>& row,
                      const std::vector<std::size_t>& qi_columns) {
  std::string key;
  for (std::size_t column : qi_columns) {
    key += row[column];
    key += '\x1f';
  }
  return key;
}

std::map<std::string, std::vector<std::size_t>> group_rows(
    const RecordTable& table, const std::vector<std::size_t>& qi_columns) {
  std::map<std::string, std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < table.rows.size(); ++r)
    classes[class_key(table.rows[r], qi_columns)].push_back(r);
  return classes;
}

}  // namespace

AnonymityCheck check_k_anonymity(const RecordTable& table,
                                 const std::vector<std::size_t>& qi_columns,
                                 std::size_t k) {
  if (k == 0) throw SemanticError("invalid-k", "k must be positive");
  validate_columns(table, qi_columns);

  AnonymityCheck check;
  if (table.rows.empty()) return check;  // vacuously satisfied
  const auto classes = group_rows(table, qi_columns);
  check.class_count = classes.size();
  check.smallest_class = std::numeric_limits<std::size_t>::max();
  for (const auto& [key, rows] : classes) {
    check.smallest_class = std::min(check.smallest_class, rows.size());
    if (rows.size() < k) check.violating_rows += rows.size();
  }
  check.satisfied = check.violating_rows == 0;
  return check;
}

AnonymityCheck check_l_diversity(const RecordTable& table,
                                 const std::vector<std::size_t>& qi_columns,
                                 std::size_t sensitive_column, std::size_t l) {
  if (l == 0) throw SemanticError("invalid-l", "l must be positive");
  validate_columns(table, qi_columns);
  validate_columns(table, {sensitive_column});

  AnonymityCheck check;
  if (table.rows.empty()) return check;
  const auto classes = group_rows(table, qi_columns);
  check.class_count = classes.size();
  check.smallest_class = std::numeric_limits<std::size_t>::max();
  for (const auto& [key, rows] : classes) {
    std::set<std::string> distinct;
    for (std::size_t r : rows) distinct.insert(table.rows[r][sensitive_column]);
    check.smallest_class = std::min(check.smallest_class, distinct.size());
    if (distinct.size() < l) check.violating_rows += rows.size();
  }
  check.satisfied = check.violating_rows == 0;
  return check;
}

std::size_t ladder_height(ColumnType type) {
  switch (type) {
    case ColumnType::kText: return 2;
    case ColumnType::kNumber: return 3;
    case ColumnType::kTimestamp: return 4;
    case ColumnType::kIp: return 4;
  }
  return 2;
}

std::string apply_ladder(const std::string& value, ColumnType type,
                         std::size_t level) {
  if (level == 0 || value.empty()) return value;
  if (level >= ladder_height(type)) return "*";
  std::optional<std::string> out;
  switch (type) {
    case ColumnType::kText:
      return value.substr(0, 1);
    case ColumnType::kNumber:
      out = try_generalize_number(value, level == 1 ? 10 : 100);
      break;
    case ColumnType::kTimestamp: {
      const TimeGranularity g = level == 1   ? TimeGranularity::kDay
                                : level == 2 ? TimeGranularity::kMonth
                                             : TimeGranularity::kYear;
      out = try_generalize_timestamp(value, g);
      break;
    }
    case ColumnType::kIp:
      out = try_generalize_ip(value, level == 1 ? 24 : level == 2 ? 16 : 8);
      break;
  }
  return out ? *out : "*";
}

namespace {

RecordTable recode(const RecordTable& base,
                   const std::vector<std::size_t>& qi_columns,
                   const std::vector<std::size_t>& levels) {
  RecordTable out = base;
  for (std::size_t i = 0; i < qi_columns.size(); ++i) {
    const std::size_t column = qi_columns[i];
    for (std::vector<std::string>& row : out.rows)
      row[column] = apply_ladder(row[column], base.column_types[column],
                                 levels[i]);
  }
  return out;
}

std::size_t deficit(const RecordTable& table,
                    const std::vector<std::size_t>& qi_columns,
                    std::size_t k) {
  return check_k_anonymity(table, qi_columns, k).violating_rows;
}

}  // namespace

AnonymizeResult enforce_k_anonymity(const RecordTable& table,
                                    const std::vector<std::size_t>& qi_columns,
                                    std::size_t k) {
  if (k == 0) throw SemanticError("invalid-k", "k must be positive");
  validate_columns(table, qi_columns);

  AnonymizeResult result;
  result.levels.assign(qi_columns.size(), 0);
  if (k > table.row_count()) {
    result.table = table;
    result.table.rows.clear();
    result.suppressed_rows = table.row_count();
    result.warnings.push_back("k exceeds the row count; all rows suppressed");
    return result;
  }

  while (true) {
    result.table = recode(table, qi_columns, result.levels);
    const std::size_t current = deficit(result.table, qi_columns, k);
    if (current == 0) return result;

    // Try one ladder step on each column; keep the step that leaves the
    // fewest rows under k. Ties go to the leftmost column.
    std::size_t best_column = qi_columns.size();
    std::size_t best_deficit = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < qi_columns.size(); ++i) {
      const ColumnType type = table.column_types[qi_columns[i]];
      if (result.levels[i] >= ladder_height(type)) continue;
      std::vector<std::size_t> candidate = result.levels;
      candidate[i] += 1;
      const std::size_t d =
          deficit(recode(table, qi_columns, candidate), qi_columns, k);
      if (d < best_deficit) {
        best_deficit = d;
        best_column = i;
      }
    }
    if (best_column == qi_columns.size()) break;  // every ladder exhausted
    result.levels[best_column] += 1;
    result.level_trace.push_back(result.levels);
  }

  // Ladders exhausted with rows still exposed: suppress those rows.
  result.table = recode(table, qi_columns, result.levels);
  const auto classes = group_rows(result.table, qi_columns);
  std::set<std::size_t> doomed;
  for (const auto& [key, rows] : classes) {
    if (rows.size() < k) doomed.insert(rows.begin(), rows.end());
  }
  std::vector<std::vector<std::string>> kept;
  for (std::size_t r = 0; r < result.table.rows.size(); ++r) {
    if (doomed.count(r) == 0) kept.push_back(std::move(result.table.rows[r]));
  }
  result.suppressed_rows = doomed.size();
  result.table.rows = std::move(kept);
  if (result.suppressed_rows > 0)
    result.warnings.push_back(std::to_string(result.suppressed_rows) +
                              " rows suppressed to reach k");
  return result;
}

}  // namespace ctilint

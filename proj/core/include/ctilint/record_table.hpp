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

#ifndef CTILINT_RECORD_TABLE_HPP_
#define CTILINT_RECORD_TABLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ctilint/document.hpp"

namespace ctilint {

// Cell type drives the generalization ladder used by anonymity enforcement.
enum class ColumnType { kText, kNumber, kTimestamp, kIp };

std::string to_string(ColumnType type);
ColumnType column_type_from_string(const std::string& text);

struct RecordTable {
  std::vector<std::string> column_names;
  std::vector<ColumnType> column_types;  // same length as column_names
  std::vector<std::vector<std::string>> rows;  // each row matches the header

  std::size_t column_count() const { return column_names.size(); }
  std::size_t row_count() const { return rows.size(); }

  // Throws SemanticError("unknown-column") when absent.
  std::size_t column_index(const std::string& name) const;
};

// RFC 4180 style: comma separated, optional quoting with "" escapes, first
// row is the header. Every row must match the header width. Types start as
// text; call infer_column_types or set them explicitly.
RecordTable parse_csv(const std::string& text);
std::string write_csv(const RecordTable& table);

// A column is typed ip/timestamp/number when every nonempty cell parses as
// that type (checked in that order); otherwise text. All-empty stays text.
ColumnType infer_column_type(const RecordTable& table, std::size_t column);
void infer_column_types(RecordTable& table);

// One row per document; each column takes the value of the first node whose
// path matches the pattern, or "" when nothing matches.
RecordTable table_from_documents(
    const std::vector<const DocumentTree*>& documents,
    const std::vector<std::pair<std::string, std::string>>& columns);

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

// One comparison against one column; the whole predicate language.
struct RowPredicate {
  std::string column;
  CompareOp op = CompareOp::kEq;
  std::string literal;
};

// Parses "column OP literal" with OP one of = != < <= > >=. Column and
// literal are whitespace-trimmed; the literal may be double-quoted to keep
// spaces or to be empty. Throws SemanticError("invalid-predicate") when the
// text has any other shape.
RowPredicate parse_predicate(const std::string& text);

// Evaluates the predicate against one row, comparing in the column's type:
// numbers as signed integers, timestamps chronologically, ips by address
// value, text bytewise. A cell or literal that does not parse as the
// column's type matches nothing, != included. Throws
// SemanticError("unknown-column") when the column is absent.
bool row_matches(const RecordTable& table, std::size_t row,
                 const RowPredicate& predicate);

}  // namespace ctilint

#endif  // CTILINT_RECORD_TABLE_HPP_

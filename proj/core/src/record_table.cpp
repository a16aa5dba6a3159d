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

#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

#include "ctilint/errors.hpp"
#include "ctilint/field_path.hpp"
#include "ctilint/record_table.hpp"
#include "ctilint/sanitize.hpp"
#include "ctilint/timeutil.hpp"

namespace ctilint {

namespace {

// Splits one CSV record starting at pos; advances pos past the record's
// line terminator. Returns false at end of input.
bool read_record(const std::string& text, std::size_t& pos,
                 std::vector<std::string>& out) {
  if (pos >= text.size()) return false;
  out.clear();
  std::string cell;
  bool quoted = false;
  const std::size_t record_start = pos;
  while (true) {
    if (pos >= text.size()) {
      if (quoted)
        throw make_parse_error("unterminated quoted cell", text, record_start);
      out.push_back(cell);
      return true;
    }
    const char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          cell += '"';
          pos += 2;
          continue;
        }
        quoted = false;
        ++pos;
        continue;
      }
      cell += c;
      ++pos;
      continue;
    }
    if (c == '"' && cell.empty()) {
      quoted = true;
      ++pos;
      continue;
    }
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
      ++pos;
      continue;
    }
    if (c == '\n' || c == '\r') {
      out.push_back(cell);
      ++pos;
      if (c == '\r' && pos < text.size() && text[pos] == '\n') ++pos;
      return true;
    }
    cell += c;
    ++pos;
  }
}

bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\r\n") != std::string::npos;
}

std::string quote_cell(const std::string& cell) {
  if (!needs_quoting(cell)) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(ColumnType type) {
  switch (type) {
    case ColumnType::kText: return "text";
    case ColumnType::kNumber: return "number";
    case ColumnType::kTimestamp: return "timestamp";
    case ColumnType::kIp: return "ip";
  }
  return "text";
}

ColumnType column_type_from_string(const std::string& text) {
  if (text == "text") return ColumnType::kText;
  if (text == "number") return ColumnType::kNumber;
  if (text == "timestamp") return ColumnType::kTimestamp;
  if (text == "ip") return ColumnType::kIp;
  throw SemanticError("invalid-column-type", text);
}

std::size_t RecordTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < column_names.size(); ++i) {
    if (column_names[i] == name) return i;
  }
  throw SemanticError("unknown-column", name);
}

RecordTable parse_csv(const std::string& text) {
  RecordTable table;
  std::size_t pos = 0;
  std::vector<std::string> record;
  if (!read_record(text, pos, record) || record.empty() ||
      (record.size() == 1 && record[0].empty()))
    throw make_parse_error("missing CSV header", text, 0);
  table.column_names = record;
  table.column_types.assign(record.size(), ColumnType::kText);
  while (true) {
    const std::size_t record_start = pos;
    if (!read_record(text, pos, record)) break;
    if (record.size() == 1 && record[0].empty()) continue;  // blank line
    if (record.size() != table.column_names.size())
      throw make_parse_error("row width does not match header", text,
                             record_start);
    table.rows.push_back(record);
  }
  return table;
}

std::string write_csv(const RecordTable& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.column_names.size(); ++i)
    out << (i == 0 ? "" : ",") << quote_cell(table.column_names[i]);
  out << "\n";
  for (const std::vector<std::string>& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i == 0 ? "" : ",") << quote_cell(row[i]);
    out << "\n";
  }
  return out.str();
}

ColumnType infer_column_type(const RecordTable& table, std::size_t column) {
  if (column >= table.column_count())
    throw SemanticError("unknown-column", std::to_string(column));
  bool any = false;
  bool all_ip = true;
  bool all_ts = true;
  bool all_num = true;
  for (const std::vector<std::string>& row : table.rows) {
    const std::string& cell = row[column];
    if (cell.empty()) continue;
    any = true;
    if (all_ip && !try_generalize_ip(cell, 32)) all_ip = false;
    if (all_ts && !parse_rfc3339(cell)) all_ts = false;
    if (all_num && !try_generalize_number(cell, 1)) all_num = false;
    if (!all_ip && !all_ts && !all_num) return ColumnType::kText;
  }
  if (!any) return ColumnType::kText;
  if (all_ip) return ColumnType::kIp;
  if (all_ts) return ColumnType::kTimestamp;
  if (all_num) return ColumnType::kNumber;
  return ColumnType::kText;
}

void infer_column_types(RecordTable& table) {
  for (std::size_t i = 0; i < table.column_count(); ++i)
    table.column_types[i] = infer_column_type(table, i);
}

RecordTable table_from_documents(
    const std::vector<const DocumentTree*>& documents,
    const std::vector<std::pair<std::string, std::string>>& columns) {
  RecordTable table;
  std::vector<PathPattern> patterns;
  for (const auto& [name, pattern] : columns) {
    table.column_names.push_back(name);
    table.column_types.push_back(ColumnType::kText);
    patterns.push_back(PathPattern::parse(pattern));
  }
  for (const DocumentTree* document : documents) {
    std::vector<std::string> row(columns.size());
    const std::vector<const FieldNode*> nodes = enumerate_fields(*document);
    for (std::size_t c = 0; c < patterns.size(); ++c) {
      for (const FieldNode* node : nodes) {
        if (patterns[c].matches(node->path)) {
          row[c] = node->value;
          break;
        }
      }
    }
    table.rows.push_back(std::move(row));
  }
  infer_column_types(table);
  return table;
}

namespace {

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  return text.substr(begin, end - begin);
}

std::optional<long long> parse_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  if (pos >= text.size()) return std::nullopt;
  long long value = 0;
  for (; pos < text.size(); ++pos) {
    if (text[pos] < '0' || text[pos] > '9') return std::nullopt;
    if (value > (std::numeric_limits<long long>::max() - 9) / 10)
      return std::nullopt;
    value = value * 10 + (text[pos] - '0');
  }
  return text[0] == '-' ? -value : value;
}

template <typename T>
int three_way(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

// Nullopt when either side fails to parse as the column's type.
std::optional<int> compare_typed(ColumnType type, const std::string& cell,
                                 const std::string& literal) {
  switch (type) {
    case ColumnType::kNumber: {
      const auto a = parse_integer(cell);
      const auto b = parse_integer(literal);
      if (!a || !b) return std::nullopt;
      return three_way(*a, *b);
    }
    case ColumnType::kTimestamp: {
      const auto a = parse_rfc3339(cell);
      const auto b = parse_rfc3339(literal);
      if (!a || !b) return std::nullopt;
      return three_way(*a, *b);
    }
    case ColumnType::kIp: {
      const auto a = parse_ipv4(cell);
      const auto b = parse_ipv4(literal);
      if (!a || !b) return std::nullopt;
      return three_way(*a, *b);
    }
    case ColumnType::kText:
      return three_way(cell, literal);
  }
  return std::nullopt;
}

}  // namespace

RowPredicate parse_predicate(const std::string& text) {
  const std::size_t at = text.find_first_of("<>!=");
  if (at == std::string::npos)
    throw SemanticError("invalid-predicate",
                        "expected \"column OP literal\" in \"" + text + "\"");
  RowPredicate predicate;
  std::size_t literal_at = at + 1;
  switch (text[at]) {
    case '=':
      predicate.op = CompareOp::kEq;
      break;
    case '!':
      if (literal_at >= text.size() || text[literal_at] != '=')
        throw SemanticError("invalid-predicate",
                            "\"!\" must be followed by \"=\"");
      predicate.op = CompareOp::kNe;
      ++literal_at;
      break;
    case '<':
      predicate.op = CompareOp::kLt;
      if (literal_at < text.size() && text[literal_at] == '=') {
        predicate.op = CompareOp::kLe;
        ++literal_at;
      }
      break;
    case '>':
      predicate.op = CompareOp::kGt;
      if (literal_at < text.size() && text[literal_at] == '=') {
        predicate.op = CompareOp::kGe;
        ++literal_at;
      }
      break;
  }
  predicate.column = trim(text.substr(0, at));
  if (predicate.column.empty())
    throw SemanticError("invalid-predicate", "missing column name");
  std::string literal = trim(text.substr(literal_at));
  if (literal.size() >= 2 && literal.front() == '"' && literal.back() == '"')
    literal = literal.substr(1, literal.size() - 2);
  else if (literal.empty())
    throw SemanticError("invalid-predicate", "missing literal");
  else if (literal.find_first_of("<>!=\"") != std::string::npos)
    throw SemanticError("invalid-predicate",
                        "unquoted literal \"" + literal +
                            "\" contains operator characters");
  predicate.literal = std::move(literal);
  return predicate;
}

bool row_matches(const RecordTable& table, std::size_t row,
                 const RowPredicate& predicate) {
  const std::size_t column = table.column_index(predicate.column);
  const std::optional<int> order = compare_typed(
      table.column_types[column], table.rows[row][column], predicate.literal);
  if (!order) return false;
  switch (predicate.op) {
    case CompareOp::kEq: return *order == 0;
    case CompareOp::kNe: return *order != 0;
    case CompareOp::kLt: return *order < 0;
    case CompareOp::kLe: return *order <= 0;
    case CompareOp::kGt: return *order > 0;
    case CompareOp::kGe: return *order >= 0;
  }
  return false;
}

}  // namespace ctilint

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

#include "test_support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ctilint::testsupport {
namespace {

// Element names that builtin rules mention (across several standards) so a
// random tree produces direct matches, inherited matches, and near misses.
const std::vector<std::string>& rule_element_names() {
  static const std::vector<std::string> names = {
      "Contact",      "IncidentSource", "DetectTime", "StartTime",
      "EndTime",      "ReportTime",     "Assessment", "IncidentID",
      "AlternativeID", "contributor",   "timestamp",  "submitted",
      "affected",     "platform",       "title",      "description",
      "definition",   "reference",      "status_change", "time",
      "host",         "dst",            "ipv4",       "ipv6",
      "src",          "port",           "status",     "PersonName",
      "Name",         "Address",        "Country",    "Identity",
  };
  return names;
}

const std::vector<std::string>& neutral_element_names() {
  static const std::vector<std::string> names = {
      "Record", "EventData", "Info",    "detail", "entry", "meta",
      "note",   "wrapper",   "Data",    "Flow",   "System",
  };
  return names;
}

const std::vector<std::string>& attribute_names() {
  static const std::vector<std::string> names = {
      "id",   "type", "name",    "date", "family",
      "role", "lang", "version", "target",
  };
  return names;
}

const std::vector<std::string>& value_pool() {
  static const std::vector<std::string> values = {
      "10.0.0.1",
      "192.168.1.77",
      "203.0.113.9",
      "2024-03-05T12:00:00Z",
      "2001-09-13T18:11:21+02:00",
      "1234",
      "-17",
      "0",
      "80",
      "alpha",
      "beta.example.com",
      "contact@example.com",
      "GET /index.html HTTP/1.0",
      "a&b<c>\"d\"",
      "",
  };
  return values;
}

std::size_t pick_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
  return pool[pick_index(rng, pool.size())];
}

std::string pick_element_name(Rng& rng) {
  // Two thirds rule vocabulary, one third neutral.
  if (pick_index(rng, 3) < 2) return pick(rng, rule_element_names());
  return pick(rng, neutral_element_names());
}

void grow(Rng& rng, FieldNode& parent, std::size_t depth,
          std::size_t& budget) {
  std::size_t attr_count = pick_index(rng, 3);  // 0..2
  std::set<std::string> used;
  for (std::size_t i = 0; i < attr_count && budget > 0; ++i) {
    std::string name = pick(rng, attribute_names());
    if (!used.insert(name).second) continue;  // one per name per element
    FieldNode attr;
    attr.raw_name = name;
    attr.path = parent.path.child(name, true);
    attr.value = pick(rng, value_pool());
    parent.children.push_back(std::move(attr));
    --budget;
  }
  if (depth >= 4) {
    parent.value = pick(rng, value_pool());
    return;
  }
  std::size_t child_count = pick_index(rng, 4);  // 0..3
  if (child_count == 0 || budget == 0) {
    parent.value = pick(rng, value_pool());
    return;
  }
  // Mixed content now and then: a value alongside element children.
  if (pick_index(rng, 4) == 0) parent.value = pick(rng, value_pool());
  for (std::size_t i = 0; i < child_count && budget > 0; ++i) {
    FieldNode child;
    child.raw_name = pick_element_name(rng);
    child.path = parent.path.child(child.raw_name, false);
    --budget;
    grow(rng, child, depth + 1, budget);
    parent.children.push_back(std::move(child));
  }
}

// Group key for the oracles: the raw qi cell tuple, joined losslessly.
std::vector<std::string> qi_tuple(const RecordTable& table, std::size_t row,
                                  const std::vector<std::size_t>& qi_columns) {
  std::vector<std::string> key;
  key.reserve(qi_columns.size());
  for (std::size_t column : qi_columns) key.push_back(table.rows[row][column]);
  return key;
}

}  // namespace

DocumentTree random_document(Rng& rng) {
  DocumentTree tree;
  tree.format = DocumentFormat::kXml;
  tree.origin = "random";
  FieldNode root;
  root.raw_name = pick_element_name(rng);
  root.path = FieldPath{}.child(root.raw_name, false);
  std::size_t budget = 1 + pick_index(rng, 40);
  grow(rng, root, 0, budget);
  tree.roots.push_back(std::move(root));
  return tree;
}

SanitizePolicy random_policy(Rng& rng) {
  static const SanitizeAction kActions[] = {
      SanitizeAction::kKeep, SanitizeAction::kSuppress,
      SanitizeAction::kGeneralize, SanitizeAction::kPseudonymize};
  static const int kPrefixes[] = {0, 8, 16, 24, 32};
  static const TimeGranularity kGranularities[] = {
      TimeGranularity::kYear, TimeGranularity::kMonth, TimeGranularity::kDay,
      TimeGranularity::kHour};
  static const long long kBins[] = {1, 5, 10, 100};
  SanitizePolicy policy;
  for (std::size_t c = 1; c < kLeakCategoryCount; ++c) {
    policy.actions[c] = kActions[pick_index(rng, 4)];
  }
  policy.generalize.ip_prefix_bits = kPrefixes[pick_index(rng, 5)];
  policy.generalize.time_granularity = kGranularities[pick_index(rng, 4)];
  policy.generalize.number_bin_width = kBins[pick_index(rng, 4)];
  policy.pseudonym_key = pick_index(rng, 2) == 0 ? "ctilint" : "other-key";
  return policy;
}

RecordTable random_table(Rng& rng, std::size_t max_rows) {
  static const std::vector<std::vector<std::string>> kPools = {
      {"alpha", "beta", "gamma", "delta"},                      // text
      {"1", "7", "42", "-5"},                                   // number
      {"2024-01-02T03:04:05Z", "2024-01-02T10:00:00Z",
       "2024-02-11T00:00:00Z", "2025-06-30T23:59:59Z"},         // timestamp
      {"10.0.0.1", "10.0.0.200", "10.0.1.5", "192.168.3.9"},    // ip
  };
  static const ColumnType kTypes[] = {ColumnType::kText, ColumnType::kNumber,
                                      ColumnType::kTimestamp, ColumnType::kIp};
  RecordTable table;
  std::size_t columns = 2 + pick_index(rng, 3);  // 2..4
  std::vector<std::vector<std::string>> domains;
  for (std::size_t c = 0; c < columns; ++c) {
    table.column_names.push_back("c" + std::to_string(c));
    std::size_t kind = pick_index(rng, 4);
    table.column_types.push_back(kTypes[kind]);
    // Per-column domain of at most four values; sometimes one slot is empty
    // or (for typed columns) junk, to exercise the ladder fallbacks.
    std::vector<std::string> domain = kPools[kind];
    if (pick_index(rng, 4) == 0) domain[pick_index(rng, 4)] = "";
    if (kind != 0 && pick_index(rng, 8) == 0) {
      domain[pick_index(rng, 4)] = "n/a";
    }
    domains.push_back(std::move(domain));
  }
  std::size_t rows = pick_index(rng, max_rows + 1);  // 0..max_rows
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::string> row;
    row.reserve(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      row.push_back(domains[c][pick_index(rng, domains[c].size())]);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::size_t> random_qi(Rng& rng, const RecordTable& table,
                                   std::size_t max_qi) {
  std::vector<std::size_t> all(table.column_count());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  std::shuffle(all.begin(), all.end(), rng);
  std::size_t take = 1 + pick_index(rng, std::min(max_qi, all.size()));
  all.resize(take);
  std::sort(all.begin(), all.end());
  return all;
}

AnonymityCheck oracle_k_anonymity(const RecordTable& table,
                                  const std::vector<std::size_t>& qi_columns,
                                  std::size_t k) {
  std::map<std::vector<std::string>, std::size_t> classes;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    ++classes[qi_tuple(table, r, qi_columns)];
  }
  AnonymityCheck check;
  check.class_count = classes.size();
  for (const auto& [key, size] : classes) {
    if (check.smallest_class == 0 || size < check.smallest_class) {
      check.smallest_class = size;
    }
    if (size < k) {
      check.satisfied = false;
      check.violating_rows += size;
    }
  }
  return check;
}

AnonymityCheck oracle_l_diversity(const RecordTable& table,
                                  const std::vector<std::size_t>& qi_columns,
                                  std::size_t sensitive_column,
                                  std::size_t l) {
  std::map<std::vector<std::string>, std::vector<std::size_t>> classes;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    classes[qi_tuple(table, r, qi_columns)].push_back(r);
  }
  AnonymityCheck check;
  check.class_count = classes.size();
  for (const auto& [key, rows] : classes) {
    std::set<std::string> distinct;
    for (std::size_t r : rows) distinct.insert(table.rows[r][sensitive_column]);
    // smallest_class reports the weakest diversity, not the fewest rows.
    if (check.smallest_class == 0 || distinct.size() < check.smallest_class) {
      check.smallest_class = distinct.size();
    }
    if (distinct.size() < l) {
      check.satisfied = false;
      check.violating_rows += rows.size();
    }
  }
  return check;
}

DocumentTree full_coverage_document(const Registry& registry,
                                    const std::string& standard_id) {
  DocumentTree tree;
  tree.format = DocumentFormat::kXml;
  tree.origin = "synthetic:" + standard_id;
  FieldNode root;
  root.raw_name = "synthetic-coverage";
  root.path = FieldPath{}.child(root.raw_name, false);

  std::size_t index = 0;
  for (const FieldRule* rule : registry.rules_for(standard_id)) {
    std::vector<std::pair<std::string, bool>> segments;
    const std::string& pattern = rule->pattern;
    std::size_t start = 0;
    while (true) {
      std::size_t slash = pattern.find('/', start);
      std::string segment = pattern.substr(
          start, slash == std::string::npos ? std::string::npos
                                            : slash - start);
      bool is_attribute = !segment.empty() && segment.front() == '@';
      if (is_attribute) segment.erase(0, 1);
      if (segment.empty() || segment == "*") {
        throw std::runtime_error("cannot instantiate pattern: " + pattern);
      }
      segments.emplace_back(std::move(segment), is_attribute);
      if (slash == std::string::npos) break;
      start = slash + 1;
    }

    FieldNode wrapper;
    wrapper.raw_name = "field" + std::to_string(index);
    wrapper.path = root.path.child(wrapper.raw_name, false);
    FieldNode* cursor = &wrapper;
    for (auto& [name, is_attribute] : segments) {
      FieldNode next;
      next.raw_name = name;
      next.path = cursor->path.child(name, is_attribute);
      cursor->children.push_back(std::move(next));
      cursor = &cursor->children.back();
    }
    cursor->value = "v" + std::to_string(index);
    root.children.push_back(std::move(wrapper));
    ++index;
  }
  tree.roots.push_back(std::move(root));
  return tree;
}

RunResult run_command(const std::string& command) {
  static std::atomic<unsigned> counter{0};
  namespace fs = std::filesystem;
  unsigned id = counter.fetch_add(1);
  fs::path out = fs::temp_directory_path() /
                 ("ctilint_test_out_" + std::to_string(::getpid()) + "_" +
                  std::to_string(id));
  fs::path err = fs::temp_directory_path() /
                 ("ctilint_test_err_" + std::to_string(::getpid()) + "_" +
                  std::to_string(id));
  std::string full = command + " > " + out.string() + " 2> " + err.string();
  int status = std::system(full.c_str());
  RunResult result;
  if (status == -1) {
    result.exit_code = -1;
  } else if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else {
    result.exit_code = -2;
  }
  result.out = read_file(out.string());
  result.err = read_file(err.string());
  fs::remove(out);
  fs::remove(err);
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string make_temp_dir(const std::string& prefix) {
  static std::atomic<unsigned> counter{0};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 (prefix + "_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter.fetch_add(1)));
  fs::create_directories(dir);
  return dir.string();
}

}  // namespace ctilint::testsupport

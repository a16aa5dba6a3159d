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

// ctilint command line front end. Works on local files only; never opens a
// socket. All stdout is byte deterministic for a fixed command line, which
// is why there is no terminal detection: color changes only through
// --no-color or the NO_COLOR environment variable, and time enters only
// through --now.
//
// Exit codes: 0 success; 1 threshold exceeded (--fail-over, --require);
// 2 input or parse error; 3 usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ctilint/annotate.hpp"
#include "ctilint/anonymity.hpp"
#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"
#include "ctilint/noise.hpp"
#include "ctilint/partition.hpp"
#include "ctilint/quality.hpp"
#include "ctilint/registry.hpp"
#include "ctilint/sanitize.hpp"
#include "ctilint/scoring.hpp"
#include "ctilint/timeutil.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ctilint::SemanticError("io-error", "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw ctilint::SemanticError("io-error", "cannot open " + path);
  out << text;
  if (!out)
    throw ctilint::SemanticError("io-error", "cannot write " + path);
}

ctilint::Registry load_registry(const std::string& rules_path) {
  if (rules_path.empty()) return ctilint::builtin_registry();
  return ctilint::load_rules(read_input(rules_path));
}

// "" and "auto" both mean: detect, and fail when detection cannot decide.
std::string resolve_standard(const ctilint::DocumentTree& tree,
                             const std::string& requested) {
  if (!requested.empty() && requested != "auto") return requested;
  const std::string detected = ctilint::detect_standard(tree);
  if (detected == "unknown")
    throw ctilint::SemanticError(
        "unknown-standard",
        "cannot detect the standard of " + tree.origin + "; pass --standard");
  return detected;
}

// An explicit --standard must name a registered standard; a typo scoring
// zero findings would read as a clean bill of health.
void require_standard(const ctilint::Registry& registry,
                      const std::string& requested) {
  if (requested.empty() || requested == "auto") return;
  if (registry.find_standard(requested) == nullptr)
    throw ctilint::SemanticError("unknown-standard", requested);
}

ctilint::ScoringMode mode_from_flag(const std::string& name) {
  return name == "distinct" ? ctilint::ScoringMode::kPerDistinctField
                            : ctilint::ScoringMode::kPerOccurrence;
}

std::string format_double(double value) {
  if (value == static_cast<double>(static_cast<long long>(value)))
    return std::to_string(static_cast<long long>(value));
  char out[64];
  std::snprintf(out, sizeof(out), "%.17g", value);
  return out;
}

std::string write_tree(const ctilint::DocumentTree& tree) {
  return tree.format == ctilint::DocumentFormat::kXml
             ? ctilint::write_xml(tree)
             : ctilint::write_json_document(tree);
}

struct CommonState {
  bool color = true;
  int exit_code = kExitOk;
};

// ---- registry ----

void cmd_registry_list(const std::string& rules_path) {
  const ctilint::Registry registry = load_registry(rules_path);
  for (const ctilint::StandardDescriptor& standard : registry.standards) {
    std::cout << standard.id << "\t" << to_string(standard.category) << "\t"
              << format_double(
                     ctilint::static_schema_score(registry, standard.id))
              << "\t" << standard.name;
    for (const std::string& flag : standard.flags)
      std::cout << " [" << flag << "]";
    std::cout << "\n";
  }
}

void cmd_registry_show(const std::string& rules_path, const std::string& id) {
  const ctilint::Registry registry = load_registry(rules_path);
  const ctilint::StandardDescriptor* standard = registry.find_standard(id);
  if (standard == nullptr)
    throw ctilint::SemanticError("unknown-standard", id);
  nlohmann::ordered_json out;
  out["id"] = standard->id;
  out["name"] = standard->name;
  out["category"] = to_string(standard->category);
  out["description"] = standard->description;
  if (!standard->flags.empty()) out["flags"] = standard->flags;
  if (standard->declared_score) out["declared_score"] = *standard->declared_score;
  if (!standard->score_note.empty()) out["score_note"] = standard->score_note;
  out["static_score"] = ctilint::static_schema_score(registry, standard->id);
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (const ctilint::FieldRule* rule : registry.rules_for(id)) {
    nlohmann::ordered_json entry;
    entry["pattern"] = rule->pattern;
    entry["category"] = to_string(rule->category);
    if (rule->universal) entry["universal"] = true;
    rules.push_back(std::move(entry));
  }
  out["rules"] = std::move(rules);
  std::cout << out.dump(2) << "\n";
}

void cmd_registry_validate(CommonState& state, const std::string& rules_path) {
  const ctilint::Registry registry = load_registry(rules_path);
  const std::vector<ctilint::ValidationIssue> issues =
      ctilint::validate_registry(registry);
  for (const ctilint::ValidationIssue& issue : issues)
    std::cout << issue.code << "\t" << issue.detail << "\n";
  if (!issues.empty()) state.exit_code = kExitInput;
}

// ---- score / annotate / corpus ----

void cmd_score(CommonState& state, const std::string& rules_path,
               const std::vector<std::string>& paths,
               const std::string& standard, const std::string& mode_name,
               const std::string& weights_path, const std::string& format,
               double fail_over, bool has_fail_over) {
  ctilint::Registry registry = load_registry(rules_path);
  require_standard(registry, standard);
  if (!weights_path.empty())
    registry.default_weights =
        ctilint::weight_profile_from_json(read_input(weights_path));
  const std::string item_standard = standard == "auto" ? "" : standard;
  std::vector<ctilint::CorpusItem> items;
  for (const std::string& path : paths)
    items.push_back({path, read_input(path), item_standard});
  const ctilint::CorpusScore corpus =
      ctilint::score_corpus(items, registry, mode_from_flag(mode_name));
  if (format == "json") {
    std::cout << ctilint::render_corpus_json(corpus);
  } else {
    ctilint::ReportOptions options;
    options.color = state.color;
    std::cout << ctilint::render_corpus_text(corpus, options);
  }
  for (const ctilint::CorpusError& error : corpus.errors)
    std::cerr << "ctilint: error: " << error.origin << ": " << error.message
              << "\n";
  if (!corpus.errors.empty()) {
    state.exit_code = kExitInput;
    return;
  }
  if (has_fail_over) {
    for (const ctilint::DocumentScore& document : corpus.documents) {
      if (document.total > fail_over) {
        state.exit_code = kExitThreshold;
        return;
      }
    }
  }
}

void cmd_annotate(CommonState& state, const std::string& rules_path,
                  const std::string& path, const std::string& standard,
                  const std::string& mode_name, const std::string& format) {
  const ctilint::Registry registry = load_registry(rules_path);
  require_standard(registry, standard);
  const std::string text = read_input(path);
  const ctilint::DocumentTree tree = ctilint::parse_document(text, path);
  const ctilint::DocumentScore score =
      ctilint::score_document(tree, registry, resolve_standard(tree, standard),
                              mode_from_flag(mode_name));
  if (format == "json") {
    std::cout << ctilint::render_report_json(score, &text);
  } else if (format == "html") {
    std::cout << ctilint::render_report_html(score, &text);
  } else {
    ctilint::ReportOptions options;
    options.color = state.color;
    std::cout << ctilint::render_report_text(score, &text, options);
  }
  (void)state;
}

void cmd_corpus(CommonState& state, const std::string& rules_path,
                const std::string& directory, const std::string& standard,
                const std::string& mode_name, const std::string& format) {
  const ctilint::Registry registry = load_registry(rules_path);
  require_standard(registry, standard);
  std::vector<std::string> paths;
  {
    std::error_code ec;
    std::filesystem::directory_iterator it(directory, ec);
    if (ec)
      throw ctilint::SemanticError("io-error", "cannot read directory " +
                                                   directory + ": " +
                                                   ec.message());
    for (const std::filesystem::directory_entry& entry : it) {
      if (!entry.is_regular_file()) continue;
      const std::string ext = entry.path().extension().string();
      if (ext == ".xml" || ext == ".json") paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  const std::string item_standard = standard == "auto" ? "" : standard;
  std::vector<ctilint::CorpusItem> items;
  for (const std::string& path : paths)
    items.push_back({path, read_input(path), item_standard});
  const ctilint::CorpusScore corpus =
      ctilint::score_corpus(items, registry, mode_from_flag(mode_name));
  if (format == "json") {
    std::cout << ctilint::render_corpus_json(corpus);
  } else {
    ctilint::ReportOptions options;
    options.color = state.color;
    std::cout << ctilint::render_corpus_text(corpus, options);
  }
  if (!corpus.errors.empty()) state.exit_code = kExitInput;
}

// ---- sanitize ----

void cmd_sanitize(const std::string& rules_path, const std::string& path,
                  const std::string& standard, const std::string& policy_path,
                  const std::string& output) {
  const ctilint::Registry registry = load_registry(rules_path);
  require_standard(registry, standard);
  const std::string text = read_input(path);
  const ctilint::DocumentTree tree = ctilint::parse_document(text, path);
  ctilint::SanitizePolicy policy;
  if (!policy_path.empty())
    policy = ctilint::sanitize_policy_from_json(read_input(policy_path));
  const ctilint::SanitizeResult result = ctilint::sanitize_document(
      tree, registry, resolve_standard(tree, standard), policy);
  for (const ctilint::SanitizeWarning& warning : result.warnings)
    std::cerr << "ctilint: warning: " << warning.path.to_string() << ": "
              << warning.message << "\n";
  std::cerr << "ctilint: sanitized " << result.changed << " fields\n";
  write_output(output, write_tree(result.tree));
}

// ---- partition ----

void cmd_partition(const std::string& rules_path, const std::string& path,
                   const std::string& standard, const std::string& out_dir,
                   const std::string& tier) {
  const ctilint::Registry registry = load_registry(rules_path);
  require_standard(registry, standard);
  const std::string text = read_input(path);
  const ctilint::DocumentTree tree = ctilint::parse_document(text, path);
  const ctilint::PartitionedDocument part = ctilint::partition_document(
      tree, registry, resolve_standard(tree, standard));
  ctilint::write_partition(out_dir, part);
  std::cerr << "ctilint: wrote " << part.holes.size() << " holes to "
            << out_dir << "\n";
  if (!tier.empty()) {
    const ctilint::DocumentTree view =
        ctilint::tier_view(part, ctilint::TierPolicy::default_policy(), tier);
    const char* ext =
        part.skeleton.format == ctilint::DocumentFormat::kXml ? ".xml"
                                                              : ".json";
    const std::filesystem::path view_path =
        std::filesystem::path(out_dir) / ("tier_" + tier + ext);
    write_output(view_path.string(), write_tree(view));
    std::cerr << "ctilint: wrote " << view_path.string() << "\n";
  }
}

void cmd_partition_merge(const std::string& dir, const std::string& output) {
  const ctilint::PartitionedDocument part = ctilint::read_partition(dir);
  const ctilint::DocumentTree tree = ctilint::merge_partition(part);
  write_output(output, write_tree(tree));
}

// ---- anonymize / dp-count ----

ctilint::RecordTable load_table(const std::string& table_path,
                                const std::string& types_path) {
  ctilint::RecordTable table = ctilint::parse_csv(read_input(table_path));
  ctilint::infer_column_types(table);
  if (!types_path.empty()) {
    const std::string text = read_input(types_path);
    nlohmann::ordered_json doc;
    try {
      doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ctilint::make_parse_error(e.what(), text,
                                      e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object())
      throw ctilint::SemanticError("invalid-types",
                                   "types file must be a JSON object");
    for (const auto& [column, type] : doc.items()) {
      if (!type.is_string())
        throw ctilint::SemanticError("invalid-types",
                                     "type for \"" + column +
                                         "\" must be a string");
      table.column_types[table.column_index(column)] =
          ctilint::column_type_from_string(type.get<std::string>());
    }
  }
  return table;
}

std::vector<std::size_t> parse_columns(const ctilint::RecordTable& table,
                                       const std::string& spec) {
  std::vector<std::size_t> columns;
  std::stringstream stream(spec);
  std::string name;
  while (std::getline(stream, name, ','))
    if (!name.empty()) columns.push_back(table.column_index(name));
  if (columns.empty())
    throw CLI::ValidationError("--qi", "needs at least one column");
  return columns;
}

void cmd_anonymize_check(CommonState& state, const std::string& table_path,
                         const std::string& types_path,
                         const std::string& qi_spec, std::size_t k,
                         bool require, const std::string& sensitive_column,
                         std::size_t l) {
  const ctilint::RecordTable table = load_table(table_path, types_path);
  const std::vector<std::size_t> qi_columns = parse_columns(table, qi_spec);
  nlohmann::ordered_json report;
  const ctilint::AnonymityCheck k_check =
      ctilint::check_k_anonymity(table, qi_columns, k);
  report["k"] = k;
  report["k_satisfied"] = k_check.satisfied;
  report["class_count"] = k_check.class_count;
  report["smallest_class"] = k_check.smallest_class;
  report["violating_rows"] = k_check.violating_rows;
  bool satisfied = k_check.satisfied;
  if (!sensitive_column.empty()) {
    const ctilint::AnonymityCheck l_check = ctilint::check_l_diversity(
        table, qi_columns, table.column_index(sensitive_column), l);
    report["l"] = l;
    report["l_satisfied"] = l_check.satisfied;
    report["smallest_distinct"] = l_check.smallest_class;
    satisfied = satisfied && l_check.satisfied;
  }
  std::cout << report.dump(2) << "\n";
  if (require && !satisfied) state.exit_code = kExitThreshold;
}

void cmd_anonymize_enforce(const std::string& table_path,
                           const std::string& types_path,
                           const std::string& qi_spec, std::size_t k) {
  const ctilint::RecordTable table = load_table(table_path, types_path);
  const std::vector<std::size_t> qi_columns = parse_columns(table, qi_spec);
  const ctilint::AnonymizeResult result =
      ctilint::enforce_k_anonymity(table, qi_columns, k);
  for (const std::string& warning : result.warnings)
    std::cerr << "ctilint: warning: " << warning << "\n";
  std::cerr << "ctilint: suppressed " << result.suppressed_rows << " rows\n";
  std::cout << ctilint::write_csv(result.table);
}

void cmd_dp_count(const std::string& table_path, const std::string& types_path,
                  const std::string& where, double epsilon,
                  std::uint64_t seed) {
  const ctilint::RecordTable table = load_table(table_path, types_path);
  const ctilint::RowPredicate predicate = ctilint::parse_predicate(where);
  char out[64];
  std::snprintf(out, sizeof(out), "%.17g\n",
                ctilint::dp_count(table, predicate, epsilon, seed));
  std::cout << out;
}

// ---- quality ----

struct QualityArgs {
  std::string feed_path;
  std::string now_text;
  std::string window = "30d";
  std::string half_life = "7d";
  std::size_t min_volume = 1;
  double cutoff = 0.3;
  std::string weights_spec;  // "t,p,a"
};

ctilint::FreeRiderPolicy quality_policy(const QualityArgs& args) {
  ctilint::FreeRiderPolicy policy;
  const auto window = ctilint::parse_duration(args.window);
  if (!window)
    throw ctilint::SemanticError("invalid-duration",
                                 "--window: cannot parse " + args.window);
  const auto half_life = ctilint::parse_duration(args.half_life);
  if (!half_life)
    throw ctilint::SemanticError("invalid-duration",
                                 "--half-life: cannot parse " + args.half_life);
  policy.window_seconds = static_cast<double>(window->count());
  policy.half_life_seconds = static_cast<double>(half_life->count());
  policy.min_volume = args.min_volume;
  policy.quality_cutoff = args.cutoff;
  if (!args.weights_spec.empty()) {
    double parts[3];
    std::size_t found = 0;
    std::stringstream stream(args.weights_spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
      std::size_t used = 0;
      try {
        if (found >= 3) throw std::invalid_argument("too many");
        parts[found] = std::stod(token, &used);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--weights", "expects three numbers t,p,a");
      }
      if (used != token.size())
        throw CLI::ValidationError("--weights", "expects three numbers t,p,a");
      ++found;
    }
    if (found != 3)
      throw CLI::ValidationError("--weights", "expects three numbers t,p,a");
    policy.weights = {parts[0], parts[1], parts[2]};
  }
  return policy;
}

std::vector<ctilint::ProviderProfile> quality_profiles(
    const QualityArgs& args, const ctilint::FreeRiderPolicy& policy) {
  const std::optional<ctilint::UtcSeconds> now =
      ctilint::parse_rfc3339(args.now_text);
  if (!now)
    throw ctilint::SemanticError("invalid-timestamp",
                                 "--now must be RFC 3339, got " +
                                     args.now_text);
  return ctilint::build_profiles(ctilint::parse_feed(read_input(args.feed_path)),
                                 *now, policy);
}

void cmd_quality_score(const QualityArgs& args) {
  const ctilint::FreeRiderPolicy policy = quality_policy(args);
  std::cout << ctilint::profiles_to_json(quality_profiles(args, policy));
}

void cmd_quality_free_riders(const QualityArgs& args) {
  const ctilint::FreeRiderPolicy policy = quality_policy(args);
  std::cout << ctilint::flags_to_json(
      ctilint::flag_free_riders(quality_profiles(args, policy),
                                policy.min_volume, policy.quality_cutoff));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"privacy linter for structured threat intelligence documents"};
  app.set_version_flag("--version", "ctilint 0.1.0");
  app.require_subcommand(1);

  CommonState state;
  app.add_flag_callback("--no-color", [&state] { state.color = false; },
                        "disable ANSI colors (NO_COLOR also works)");
  if (std::getenv("NO_COLOR") != nullptr) state.color = false;

  std::string rules_path;
  std::string standard = "auto";
  std::string mode_name = "occurrence";
  const std::vector<std::string> modes{"occurrence", "distinct"};

  auto add_rules = [&rules_path](CLI::App* sub) {
    sub->add_option("--rules", rules_path,
                    "registry JSON replacing the builtin rules");
  };
  auto add_standard = [&standard](CLI::App* sub) {
    sub->add_option("--standard", standard,
                    "standard id, or auto to detect (default)");
  };
  auto add_mode = [&mode_name, &modes](CLI::App* sub) {
    sub->add_option("--mode", mode_name,
                    "count repeated fields once (distinct) or every time "
                    "(occurrence)")
        ->check(CLI::IsMember(modes));
  };

  // registry list|show|validate
  auto* registry_cmd =
      app.add_subcommand("registry", "inspect the rule registry");
  registry_cmd->require_subcommand(1);
  auto* registry_list =
      registry_cmd->add_subcommand("list", "one line per standard");
  add_rules(registry_list);
  auto* registry_show =
      registry_cmd->add_subcommand("show", "one standard with its rules");
  std::string show_id;
  registry_show->add_option("id", show_id, "standard id")->required();
  add_rules(registry_show);
  auto* registry_validate = registry_cmd->add_subcommand(
      "validate", "check registry invariants; exit 2 on issues");
  add_rules(registry_validate);

  // score
  auto* score = app.add_subcommand("score", "score one or more documents");
  std::vector<std::string> score_paths;
  std::string weights_path;
  std::string score_format = "text";
  double fail_over = 0.0;
  score->add_option("files", score_paths, "documents to score")->required();
  add_rules(score);
  add_standard(score);
  add_mode(score);
  score->add_option("--weights", weights_path,
                    "JSON weight profile replacing the default weights");
  score->add_option("--format", score_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  auto* score_fail =
      score->add_option("--fail-over", fail_over,
                        "exit 1 when any score exceeds this threshold");

  // annotate
  auto* annotate =
      app.add_subcommand("annotate", "findings report for one document");
  std::string annotate_path;
  std::string annotate_format = "text";
  annotate->add_option("file", annotate_path, "document to annotate")
      ->required();
  add_rules(annotate);
  add_standard(annotate);
  add_mode(annotate);
  annotate->add_option("--format", annotate_format, "output format")
      ->check(CLI::IsMember({"text", "html", "json"}));

  // corpus
  auto* corpus =
      app.add_subcommand("corpus", "score every .xml/.json file in a directory");
  std::string corpus_dir;
  std::string corpus_format = "text";
  corpus->add_option("dir", corpus_dir, "directory to scan")->required();
  add_rules(corpus);
  add_standard(corpus);
  add_mode(corpus);
  corpus->add_option("--format", corpus_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // sanitize
  auto* sanitize = app.add_subcommand("sanitize", "rewrite risky values");
  std::string sanitize_path;
  std::string policy_path;
  std::string sanitize_output;
  sanitize->add_option("file", sanitize_path, "document to sanitize")
      ->required();
  sanitize->add_option("--policy", policy_path,
                       "JSON policy file (default: keep inference, "
                       "generalize sensitive, pseudonymize pii)");
  sanitize->add_option("-o,--output", sanitize_output,
                       "output file (default: stdout)");
  add_rules(sanitize);
  add_standard(sanitize);

  // partition (+ merge)
  auto* partition =
      app.add_subcommand("partition", "split a document by leak category");
  std::string partition_path;
  std::string partition_out;
  std::string partition_tier;
  partition->add_option("file", partition_path, "document to split");
  partition->add_option("-o,--out", partition_out, "output directory");
  partition->add_option("--tier", partition_tier,
                        "also write this audience's view (public, vetted, "
                        "or trusted) as tier_<ID>.<ext>");
  add_rules(partition);
  add_standard(partition);
  auto* merge = partition->add_subcommand(
      "merge", "reassemble the original document from a partition");
  std::string merge_dir;
  std::string merge_out;
  merge->add_option("dir", merge_dir, "partition directory")->required();
  merge->add_option("-o,--out", merge_out, "output file (default: stdout)");

  // anonymize check|enforce
  auto* anonymize =
      app.add_subcommand("anonymize", "k-anonymity over CSV records");
  anonymize->require_subcommand(1);
  std::string anon_table;
  std::string anon_types;
  std::string anon_qi;
  std::size_t anon_k = 2;
  std::size_t anon_l = 2;
  std::string anon_sensitive;
  bool anon_require = false;
  auto add_table_args = [&](CLI::App* sub) {
    sub->add_option("--table", anon_table, "CSV file, first row is the header")
        ->required();
    sub->add_option("--types", anon_types,
                    "JSON column type overrides, e.g. {\"port\":\"number\"}");
    sub->add_option("--qi", anon_qi,
                    "comma separated quasi-identifier columns")
        ->required();
    sub->add_option("--k", anon_k, "anonymity parameter")
        ->check(CLI::PositiveNumber);
  };
  auto* anon_check =
      anonymize->add_subcommand("check", "report k (and optionally l) status");
  add_table_args(anon_check);
  anon_check->add_option("--l", anon_l, "diversity parameter")
      ->check(CLI::PositiveNumber);
  anon_check->add_option("--sensitive", anon_sensitive,
                         "sensitive column for distinct l-diversity");
  anon_check->add_flag("--require", anon_require,
                       "exit 1 when the check fails");
  auto* anon_enforce = anonymize->add_subcommand(
      "enforce", "generalize and suppress until k holds; CSV on stdout");
  add_table_args(anon_enforce);

  // dp-count
  auto* dp = app.add_subcommand(
      "dp-count", "differentially private row count (Laplace mechanism)");
  std::string dp_table;
  std::string dp_types;
  std::string dp_where;
  double dp_epsilon = 1.0;
  std::uint64_t dp_seed = 0;
  dp->add_option("--table", dp_table, "CSV file, first row is the header")
      ->required();
  dp->add_option("--types", dp_types,
                 "JSON column type overrides, e.g. {\"port\":\"number\"}");
  dp->add_option("--where", dp_where,
                 "row filter: column OP literal, OP one of = != < <= > >=")
      ->required();
  dp->add_option("--epsilon", dp_epsilon, "privacy budget")
      ->check(CLI::PositiveNumber);
  dp->add_option("--seed", dp_seed, "RNG seed");

  // quality score|free-riders
  auto* quality = app.add_subcommand(
      "quality", "provider quality profiles from an indicator feed");
  quality->require_subcommand(1);
  QualityArgs quality_args;
  auto add_quality_args = [&quality_args](CLI::App* sub) {
    sub->add_option("--feed", quality_args.feed_path,
                    "JSONL indicator feed")
        ->required();
    sub->add_option("--now", quality_args.now_text,
                    "reference time, RFC 3339 (fixed for reproducibility)")
        ->required();
    sub->add_option("--window", quality_args.window,
                    "free-rider window, e.g. 30d or 12h");
    sub->add_option("--half-life", quality_args.half_life,
                    "timeliness half life, e.g. 7d");
    sub->add_option("--min-volume", quality_args.min_volume,
                    "minimum in-window submissions");
    sub->add_option("--cutoff", quality_args.cutoff,
                    "minimum in-window mean composite");
    sub->add_option("--weights", quality_args.weights_spec,
                    "composite weights t,p,a summing to one "
                    "(default equal thirds)");
  };
  auto* quality_score =
      quality->add_subcommand("score", "per-provider profile snapshot");
  add_quality_args(quality_score);
  auto* quality_free = quality->add_subcommand(
      "free-riders", "providers below the volume or quality thresholds");
  add_quality_args(quality_free);

  // Let --no-color and --version appear after any subcommand too.
  std::vector<CLI::App*> pending{&app};
  while (!pending.empty()) {
    CLI::App* current = pending.back();
    pending.pop_back();
    for (CLI::App* sub :
         current->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      pending.push_back(sub);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit clean; anything else is a usage error.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (registry_list->parsed()) cmd_registry_list(rules_path);
    if (registry_show->parsed()) cmd_registry_show(rules_path, show_id);
    if (registry_validate->parsed()) cmd_registry_validate(state, rules_path);
    if (score->parsed())
      cmd_score(state, rules_path, score_paths, standard, mode_name,
                weights_path, score_format, fail_over,
                score_fail->count() > 0);
    if (annotate->parsed())
      cmd_annotate(state, rules_path, annotate_path, standard, mode_name,
                   annotate_format);
    if (corpus->parsed())
      cmd_corpus(state, rules_path, corpus_dir, standard, mode_name,
                 corpus_format);
    if (sanitize->parsed())
      cmd_sanitize(rules_path, sanitize_path, standard, policy_path,
                   sanitize_output);
    if (partition->parsed()) {
      if (merge->parsed()) {
        cmd_partition_merge(merge_dir, merge_out);
      } else {
        if (partition_path.empty())
          throw CLI::ValidationError("partition", "needs a document file");
        if (partition_out.empty())
          throw CLI::ValidationError("partition",
                                     "needs -o/--out DIRECTORY");
        cmd_partition(rules_path, partition_path, standard, partition_out,
                      partition_tier);
      }
    }
    if (anon_check->parsed())
      cmd_anonymize_check(state, anon_table, anon_types, anon_qi, anon_k,
                          anon_require, anon_sensitive, anon_l);
    if (anon_enforce->parsed())
      cmd_anonymize_enforce(anon_table, anon_types, anon_qi, anon_k);
    if (dp->parsed())
      cmd_dp_count(dp_table, dp_types, dp_where, dp_epsilon, dp_seed);
    if (quality_score->parsed()) cmd_quality_score(quality_args);
    if (quality_free->parsed()) cmd_quality_free_riders(quality_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "ctilint: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ctilint::Error& e) {
    std::cerr << "ctilint: error: " << e.what() << "\n";
    return kExitInput;
  }
  return state.exit_code;
}

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

#include <sstream>

#include <nlohmann/json.hpp>

#include "ctilint/annotate.hpp"
#include "ctilint/errors.hpp"

namespace ctilint {

namespace {

using Json = nlohmann::ordered_json;

const char* category_color(LeakCategory category) {
  switch (category) {
    case LeakCategory::kPii: return "\x1b[31m";        // red
    case LeakCategory::kSensitive: return "\x1b[35m";  // magenta
    case LeakCategory::kInference: return "\x1b[33m";  // yellow
    case LeakCategory::kPublic: break;
  }
  return "\x1b[32m";  // green
}

std::string paint(LeakCategory category, const std::string& text,
                  const ReportOptions& options) {
  if (!options.color) return text;
  return std::string(category_color(category)) + text + "\x1b[0m";
}

std::string elide(const std::string& value, std::size_t limit) {
  if (value.size() <= limit) return value;
  return value.substr(0, limit) + "...";
}

std::string format_total(double total) {
  std::ostringstream out;
  // Scores are integral under integral weights; keep "31" over "31.000000".
  if (total == static_cast<double>(static_cast<long long>(total)))
    out << static_cast<long long>(total);
  else
    out << total;
  return out.str();
}

std::string span_suffix(const SourceSpan& span, const std::string* source) {
  if (source == nullptr || span.end == 0) return "";
  auto [line, column] = line_column_at(*source, span.begin);
  std::ostringstream out;
  out << " [line " << line << ", col " << column << "]";
  return out.str();
}

}  // namespace

std::string render_report_text(const DocumentScore& score,
                               const std::string* source_text,
                               const ReportOptions& options) {
  std::ostringstream out;
  out << "origin: " << score.origin << "\n";
  out << "standard: " << score.standard_id << "\n";
  out << "mode: " << to_string(score.mode) << "\n";
  if (score.findings.empty()) {
    out << "findings: none\n";
  } else {
    out << "findings:\n";
    for (const FieldFinding& finding : score.findings) {
      const std::string label = to_string(finding.category);
      out << "  " << paint(finding.category, label, options);
      for (std::size_t pad = label.size(); pad < 9; ++pad) out << ' ';
      out << ' ' << finding.path.to_string();
      if (!finding.value.empty())
        out << " \"" << elide(finding.value, options.value_limit) << '"';
      out << " (rule " << finding.pattern;
      if (finding.inherited) out << ", inherited";
      out << ')' << span_suffix(finding.span, source_text) << "\n";
    }
  }
  out << "totals:";
  for (std::size_t c = 0; c < kLeakCategoryCount; ++c) {
    const auto category = static_cast<LeakCategory>(c);
    out << (c == 0 ? " " : ", ") << to_string(category) << ' '
        << score.counts[static_cast<std::size_t>(c)];
  }
  out << "\n";
  out << "score: " << format_total(score.total) << "\n";
  return out.str();
}

std::string render_report_json(const DocumentScore& score,
                               const std::string* source_text) {
  Json report = Json::object();
  report["origin"] = score.origin;
  report["standard"] = score.standard_id;
  report["mode"] = to_string(score.mode);
  report["score"] = score.total;
  Json counts = Json::object();
  for (std::size_t c = 0; c < kLeakCategoryCount; ++c)
    counts[to_string(static_cast<LeakCategory>(c))] =
        score.counts[static_cast<std::size_t>(c)];
  report["counts"] = std::move(counts);
  Json findings = Json::array();
  for (const FieldFinding& finding : score.findings) {
    Json entry = Json::object();
    entry["path"] = finding.path.to_string();
    entry["category"] = to_string(finding.category);
    entry["value"] = finding.value;
    entry["rule"] = finding.pattern;
    entry["inherited"] = finding.inherited;
    if (finding.span.end != 0) {
      entry["byte_begin"] = finding.span.begin;
      entry["byte_end"] = finding.span.end;
      if (source_text != nullptr) {
        auto [line, column] = line_column_at(*source_text, finding.span.begin);
        entry["line"] = line;
        entry["column"] = column;
      }
    }
    findings.push_back(std::move(entry));
  }
  report["findings"] = std::move(findings);
  return report.dump(2) + "\n";
}

namespace {

std::string escape_html(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_report_html(const DocumentScore& score,
                               const std::string* source_text) {
  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>" << escape_html(score.origin) << "</title>\n"
      << "<style>\n"
      << "body { font-family: sans-serif; margin: 2em; }\n"
      << "table { border-collapse: collapse; }\n"
      << "td, th { border: 1px solid #999; padding: 0.3em 0.6em; "
         "text-align: left; }\n"
      << "tr.pii td { background: #fdd; }\n"
      << "tr.sensitive td { background: #fde8fd; }\n"
      << "tr.inference td { background: #ffd; }\n"
      << "tr.public td { background: #dfd; }\n"
      << "</style>\n</head>\n<body>\n"
      << "<h1>" << escape_html(score.origin) << "</h1>\n"
      << "<p>standard " << escape_html(score.standard_id) << ", mode "
      << to_string(score.mode) << ", score <strong>"
      << format_total(score.total) << "</strong></p>\n";
  out << "<p>";
  for (std::size_t c = 0; c < kLeakCategoryCount; ++c) {
    const auto category = static_cast<LeakCategory>(c);
    out << (c == 0 ? "" : ", ") << to_string(category) << ' '
        << score.counts[static_cast<std::size_t>(c)];
  }
  out << "</p>\n";
  if (score.findings.empty()) {
    out << "<p>no findings</p>\n";
  } else {
    out << "<table>\n<tr><th>category</th><th>path</th><th>value</th>"
        << "<th>rule</th><th>location</th></tr>\n";
    for (const FieldFinding& finding : score.findings) {
      out << "<tr class=\"" << to_string(finding.category) << "\">"
          << "<td>" << to_string(finding.category) << "</td>"
          << "<td>" << escape_html(finding.path.to_string()) << "</td>"
          << "<td>" << escape_html(finding.value) << "</td>"
          << "<td>" << escape_html(finding.pattern)
          << (finding.inherited ? " (inherited)" : "") << "</td><td>";
      if (source_text != nullptr && finding.span.end != 0) {
        auto [line, column] = line_column_at(*source_text, finding.span.begin);
        out << "line " << line << ", col " << column;
      }
      out << "</td></tr>\n";
    }
    out << "</table>\n";
  }
  out << "</body>\n</html>\n";
  return out.str();
}

std::string render_corpus_text(const CorpusScore& corpus,
                               const ReportOptions& options) {
  std::ostringstream out;
  for (const DocumentScore& document : corpus.documents) {
    out << document.origin << ": score " << format_total(document.total)
        << " (" << document.standard_id << ";";
    for (std::size_t c = 0; c < kLeakCategoryCount; ++c) {
      const auto category = static_cast<LeakCategory>(c);
      out << ' '
          << paint(category, to_string(category), options) << ' '
          << document.counts[static_cast<std::size_t>(c)]
          << (c + 1 < kLeakCategoryCount ? "," : ")");
    }
    out << "\n";
  }
  for (const CorpusError& error : corpus.errors)
    out << error.origin << ": error: " << error.message << "\n";
  return out.str();
}

std::string render_corpus_json(const CorpusScore& corpus) {
  Json report = Json::object();
  Json documents = Json::array();
  for (const DocumentScore& document : corpus.documents) {
    Json entry = Json::object();
    entry["origin"] = document.origin;
    entry["standard"] = document.standard_id;
    entry["score"] = document.total;
    Json counts = Json::object();
    for (std::size_t c = 0; c < kLeakCategoryCount; ++c)
      counts[to_string(static_cast<LeakCategory>(c))] =
          document.counts[static_cast<std::size_t>(c)];
    entry["counts"] = std::move(counts);
    documents.push_back(std::move(entry));
  }
  report["documents"] = std::move(documents);
  Json errors = Json::array();
  for (const CorpusError& error : corpus.errors) {
    Json entry = Json::object();
    entry["origin"] = error.origin;
    entry["message"] = error.message;
    errors.push_back(std::move(entry));
  }
  report["errors"] = std::move(errors);
  return report.dump(2) + "\n";
}

}  // namespace ctilint

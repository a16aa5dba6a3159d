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

#ifndef CTILINT_ANNOTATE_HPP_
#define CTILINT_ANNOTATE_HPP_

#include <string>

#include "ctilint/scoring.hpp"

namespace ctilint {

struct ReportOptions {
  bool color = false;          // ANSI colors in the text renderer
  std::size_t value_limit = 60;  // longer finding values are elided
};

// Human-readable findings report. Output is byte deterministic for a given
// score and options; when source_text is non-null, spans resolve to
// line/column positions. Findings appear in tree order.
std::string render_report_text(const DocumentScore& score,
                               const std::string* source_text = nullptr,
                               const ReportOptions& options = {});

// The same report as a JSON object (two-space indent, trailing newline).
std::string render_report_json(const DocumentScore& score,
                               const std::string* source_text = nullptr);

// Self-contained HTML page with a findings table, one row class per leak
// category. Byte deterministic like the other renderers.
std::string render_report_html(const DocumentScore& score,
                               const std::string* source_text = nullptr);

// Corpus summary: one line per document (score, counts) plus parse errors.
std::string render_corpus_text(const CorpusScore& corpus,
                               const ReportOptions& options = {});
std::string render_corpus_json(const CorpusScore& corpus);

}  // namespace ctilint

#endif  // CTILINT_ANNOTATE_HPP_

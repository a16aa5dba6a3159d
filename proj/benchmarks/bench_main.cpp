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

// Hot-path benchmarks: parsing, scoring, sanitizing, partitioning a real
// document, plus the tabular primitives. Run with --benchmark_filter=... to
// focus on one.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "ctilint/anonymity.hpp"
#include "ctilint/ingest.hpp"
#include "ctilint/noise.hpp"
#include "ctilint/partition.hpp"
#include "ctilint/record_table.hpp"
#include "ctilint/registry.hpp"
#include "ctilint/sanitize.hpp"
#include "ctilint/scoring.hpp"

namespace {

using namespace ctilint;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string& sample_text() {
  static const std::string text =
      read_file(std::string(CTILINT_SAMPLES_DIR) + "/iodef_worm_report.xml");
  return text;
}

const DocumentTree& sample_tree() {
  static const DocumentTree tree = parse_xml(sample_text(), "bench");
  return tree;
}

const Registry& registry() {
  static const Registry instance = builtin_registry();
  return instance;
}

// An 800-row table with a small quasi-identifier domain, so enforcement has
// real grouping work to do.
RecordTable wide_table() {
  RecordTable table;
  table.column_names = {"zip", "age", "port"};
  table.column_types = {ColumnType::kNumber, ColumnType::kNumber,
                        ColumnType::kNumber};
  for (int i = 0; i < 800; ++i) {
    table.rows.push_back({std::to_string(13000 + i % 23),
                          std::to_string(18 + (i * 7) % 60),
                          std::to_string(i % 1024)});
  }
  return table;
}

void BM_ParseXml(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_xml(sample_text(), "bench"));
  }
}
BENCHMARK(BM_ParseXml);

void BM_ScoreDocument(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        score_document(sample_tree(), registry(), "iodef"));
  }
}
BENCHMARK(BM_ScoreDocument);

void BM_StaticSchemaScores(benchmark::State& state) {
  for (auto _ : state) {
    double sum = 0.0;
    for (const StandardDescriptor& standard : registry().standards)
      sum += static_schema_score(registry(), standard.id);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_StaticSchemaScores);

void BM_SanitizeDocument(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sanitize_document(sample_tree(), registry(), "iodef"));
  }
}
BENCHMARK(BM_SanitizeDocument);

void BM_PartitionMerge(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(merge_partition(
        partition_document(sample_tree(), registry(), "iodef")));
  }
}
BENCHMARK(BM_PartitionMerge);

void BM_EnforceKAnonymity(benchmark::State& state) {
  const RecordTable table = wide_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enforce_k_anonymity(table, {0, 1}, 5));
  }
}
BENCHMARK(BM_EnforceKAnonymity);

void BM_DpCount(benchmark::State& state) {
  const RecordTable table = wide_table();
  const RowPredicate predicate = parse_predicate("port < 512");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_count(table, predicate, 1.0, seed++));
  }
}
BENCHMARK(BM_DpCount);

}  // namespace

BENCHMARK_MAIN();

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ctilint/errors.hpp"
#include "ctilint/noise.hpp"
#include "ctilint/record_table.hpp"
#include "test_support.hpp"

using namespace ctilint;

namespace {

RecordTable counting_table(std::size_t matching, std::size_t other) {
  RecordTable table;
  table.column_names = {"n"};
  table.column_types = {ColumnType::kNumber};
  for (std::size_t i = 0; i < matching; ++i) table.rows.push_back({"1"});
  for (std::size_t i = 0; i < other; ++i) table.rows.push_back({"2"});
  return table;
}

}  // namespace

TEST_CASE("epsilon must be positive") {
  CHECK_THROWS_AS(LaplaceNoise(0.0, 1), SemanticError);
  CHECK_THROWS_AS(LaplaceNoise(-1.0, 1), SemanticError);
  CHECK(LaplaceNoise(2.0, 1).scale() == 0.5);
  CHECK(LaplaceNoise(0.25, 1).scale() == 4.0);
}

TEST_CASE("seeded draws are reproducible") {
  LaplaceNoise a(1.0, 42);
  LaplaceNoise b(1.0, 42);
  for (int i = 0; i < 100; ++i) CHECK(a.sample() == b.sample());
  LaplaceNoise c(1.0, 43);
  bool all_equal = true;
  LaplaceNoise a2(1.0, 42);
  for (int i = 0; i < 10; ++i) {
    if (a2.sample() != c.sample()) all_equal = false;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("samples follow a laplace distribution") {
  const int n = 200000;
  LaplaceNoise noise(1.0, 20240305);
  double sum = 0.0;
  double sum_squares = 0.0;
  int within_ln2 = 0;
  for (int i = 0; i < n; ++i) {
    double x = noise.sample();
    sum += x;
    sum_squares += x * x;
    if (std::abs(x) <= std::log(2.0)) ++within_ln2;
  }
  double mean = sum / n;
  double variance = (sum_squares - n * mean * mean) / (n - 1);
  // Laplace(0, 1): mean 0, variance 2, and half the mass inside |x| <= ln 2.
  CHECK(std::abs(mean) < 0.02);
  CHECK(variance == doctest::Approx(2.0).epsilon(0.05));
  CHECK(std::abs(within_ln2 / double(n) - 0.5) < 0.01);
}

TEST_CASE("scale shrinks as epsilon grows") {
  double spread_tight = 0.0;
  double spread_loose = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    spread_tight += std::abs(LaplaceNoise(10.0, seed).sample());
    spread_loose += std::abs(LaplaceNoise(0.5, seed).sample());
  }
  CHECK(spread_tight < spread_loose);
}

TEST_CASE("dp_count is the exact count plus one seeded draw") {
  RecordTable table = counting_table(7, 5);
  RowPredicate predicate = parse_predicate("n = 1");
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    double noisy = dp_count(table, predicate, 1.0, seed);
    double expected = 7.0 + LaplaceNoise(1.0, seed).sample();
    CHECK(noisy == expected);
  }
  // Same seed, same answer; the mechanism is replayable.
  CHECK(dp_count(table, predicate, 1.0, 7) ==
        dp_count(table, predicate, 1.0, 7));
  // A predicate matching nothing counts zero before noise.
  RowPredicate none = parse_predicate("n = 3");
  CHECK(dp_count(table, none, 1.0, 7) ==
        LaplaceNoise(1.0, 7).sample());
}

TEST_CASE("dp_count respects typed predicates") {
  RecordTable table = counting_table(4, 8);
  CHECK(dp_count(table, parse_predicate("n < 2"), 1.0, 3) ==
        4.0 + LaplaceNoise(1.0, 3).sample());
  CHECK(dp_count(table, parse_predicate("n != 1"), 1.0, 3) ==
        8.0 + LaplaceNoise(1.0, 3).sample());
  CHECK_THROWS_AS(dp_count(table, parse_predicate("ghost = 1"), 1.0, 3),
                  SemanticError);
  CHECK_THROWS_AS(dp_count(table, parse_predicate("n = 1"), 0.0, 3),
                  SemanticError);
}

TEST_CASE("noisy counts over many seeds center on the true count") {
  RecordTable table = counting_table(50, 10);
  RowPredicate predicate = parse_predicate("n = 1");
  const int n = 10000;
  double sum = 0.0;
  double sum_squares = 0.0;
  for (int seed = 0; seed < n; ++seed) {
    double x = dp_count(table, predicate, 1.0, seed) - 50.0;
    sum += x;
    sum_squares += x * x;
  }
  double mean = sum / n;
  double variance = (sum_squares - n * mean * mean) / (n - 1);
  CHECK(std::abs(mean) <= 0.0424);  // 3 * sqrt(2 / 10000)
  CHECK(variance > 2.0 * 0.85);
  CHECK(variance < 2.0 * 1.15);
}

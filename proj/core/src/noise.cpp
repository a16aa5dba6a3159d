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

#include <cmath>

#include "ctilint/errors.hpp"
#include "ctilint/noise.hpp"

namespace ctilint {

LaplaceNoise::LaplaceNoise(double epsilon, std::uint64_t seed)
    : rng_(seed), scale_(0.0) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw SemanticError("invalid-epsilon", "epsilon must be positive");
  scale_ = 1.0 / epsilon;
}

double LaplaceNoise::sample() {
  // Inverse transform on u uniform in (-0.5, 0.5):
  //   x = -scale * sgn(u) * ln(1 - 2|u|)
  // Redraw when 1 - 2|u| would hit zero so the log stays finite.
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);
  double u;
  double remainder;
  do {
    u = uniform(rng_);
    remainder = 1.0 - 2.0 * std::fabs(u);
  } while (remainder <= 0.0);
  const double magnitude = -scale_ * std::log(remainder);
  return u < 0.0 ? -magnitude : magnitude;
}

double dp_count(const RecordTable& table, const RowPredicate& predicate,
                double epsilon, std::uint64_t seed) {
  double count = 0.0;
  for (std::size_t row = 0; row < table.row_count(); ++row) {
    if (row_matches(table, row, predicate)) count += 1.0;
  }
  return LaplaceNoise(epsilon, seed).noisy_count(count);
}

}  // namespace ctilint

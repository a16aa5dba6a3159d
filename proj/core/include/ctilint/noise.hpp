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

#ifndef CTILINT_NOISE_HPP_
#define CTILINT_NOISE_HPP_

#include <cstdint>
#include <random>

#include "ctilint/record_table.hpp"

namespace ctilint {

// Laplace mechanism for count queries (sensitivity 1): adding noise with
// scale 1/epsilon gives epsilon differential privacy. Deterministic for a
// given seed.
class LaplaceNoise {
 public:
  // epsilon must be positive; throws SemanticError("invalid-epsilon").
  LaplaceNoise(double epsilon, std::uint64_t seed);

  // One draw from Laplace(0, 1/epsilon).
  double sample();

  double noisy_count(double true_count) { return true_count + sample(); }

  double scale() const { return scale_; }

 private:
  std::mt19937_64 rng_;
  double scale_;
};

// Differentially private count of the rows matching the predicate: the exact
// count plus one Laplace(0, 1/epsilon) draw. Deterministic for a given seed.
double dp_count(const RecordTable& table, const RowPredicate& predicate,
                double epsilon, std::uint64_t seed);

}  // namespace ctilint

#endif  // CTILINT_NOISE_HPP_

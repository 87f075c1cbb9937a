// Copyright 2026 The tentlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tentlab {

// Equal-width bin counts over [0, N]. Bins are right-open except the last,
// which also takes x == N.
struct Histogram {
  double bound = 0.0;
  std::vector<std::size_t> counts;
  std::size_t total = 0;
  double sup_norm = 0.0;    // max_b |count_b / total - 1/B|
  double chi_square = 0.0;  // sum_b (count_b - total/B)^2 / (total/B)

  std::size_t bins() const { return counts.size(); }
  double bin_lo(std::size_t b) const { return bound * static_cast<double>(b) / static_cast<double>(bins()); }
  double bin_hi(std::size_t b) const { return bound * static_cast<double>(b + 1) / static_cast<double>(bins()); }
};

struct UniformityMetrics {
  double sup_norm = 0.0;
  double chi_square = 0.0;
};

// Throws DomainError on an empty sample, a value outside [0, N], or fewer than
// two bins.
Histogram build_histogram(std::span<const double> values, double bound, std::size_t bins);

// Requires total > 0.
UniformityMetrics uniformity_metrics(const Histogram& h);

// "bin_lo,bin_hi,count" rows.
std::string to_csv(const Histogram& h);

}  // namespace tentlab

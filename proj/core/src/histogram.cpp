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

#include "tentlab/harness/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tentlab/errors.hpp"

namespace tentlab {

Histogram build_histogram(std::span<const double> values, double bound, std::size_t bins) {
  if (bins < 2) throw DomainError("histogram: need at least two bins");
  if (!(bound > 0.0)) throw DomainError("histogram: bound must be positive");
  if (values.empty()) throw DomainError("histogram: no values");

  Histogram h;
  h.bound = bound;
  h.counts.assign(bins, 0);
  const auto nbins = static_cast<double>(bins);
  for (const double v : values) {
    if (!(v >= 0.0 && v <= bound)) throw DomainError("histogram: value " + std::to_string(v) + " outside [0, N]");
    const auto b = static_cast<std::size_t>(std::floor(v / bound * nbins));
    ++h.counts[std::min(b, bins - 1)];
  }
  h.total = values.size();
  const UniformityMetrics m = uniformity_metrics(h);
  h.sup_norm = m.sup_norm;
  h.chi_square = m.chi_square;
  return h;
}

UniformityMetrics uniformity_metrics(const Histogram& h) {
  if (h.total == 0) throw DomainError("uniformity metrics: empty histogram");
  const auto total = static_cast<double>(h.total);
  const double expected_share = 1.0 / static_cast<double>(h.bins());
  const double expected_count = total * expected_share;
  UniformityMetrics m;
  for (const std::size_t c : h.counts) {
    const auto count = static_cast<double>(c);
    m.sup_norm = std::max(m.sup_norm, std::abs(count / total - expected_share));
    m.chi_square += (count - expected_count) * (count - expected_count) / expected_count;
  }
  return m;
}

std::string to_csv(const Histogram& h) {
  std::ostringstream os;
  os.precision(17);
  os << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.bins(); ++b) os << h.bin_lo(b) << ',' << h.bin_hi(b) << ',' << h.counts[b] << '\n';
  return os.str();
}

}  // namespace tentlab

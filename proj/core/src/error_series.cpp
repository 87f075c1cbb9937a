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

#include "tentlab/dynamics/error_series.hpp"

#include <sstream>

namespace tentlab {

ErrorSeries error_accumulation(const ExactRational& x0, const TentParams& params, const Backend& backend,
                               std::size_t horizon) {
  const auto exact = iterate(x0, params, Backend::rational(), horizon);
  const auto computed = iterate(x0, params, backend, horizon);

  ErrorSeries out;
  out.deviations.reserve(horizon + 1);
  out.running_sum.reserve(horizon + 1);
  ExactRational sum;
  for (std::size_t t = 0; t <= horizon; ++t) {
    ExactRational d = abs_diff(exact_value(computed[t]), std::get<ExactRational>(exact[t]));
    sum += d;
    out.deviations.push_back(std::move(d));
    out.running_sum.push_back(sum);
  }
  return out;
}

std::string to_csv(const ErrorSeries& series) {
  std::ostringstream os;
  os << "t,E_t\n";
  for (std::size_t t = 0; t < series.running_sum.size(); ++t) {
    const ExactRational& e = series.running_sum[t];
    os << t << ',' << to_terminating_decimal(e).value_or(to_decimal_approx(e, 30)) << '\n';
  }
  return os.str();
}

}  // namespace tentlab

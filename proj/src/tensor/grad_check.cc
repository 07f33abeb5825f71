// Copyright 2026 The sac-oie Authors.
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

#include "sacoie/tensor/grad_check.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sacoie::autodiff {

double RelativeError(double analytic, double numeric, double floor) {
  const double denom = std::max({floor, std::abs(analytic), std::abs(numeric)});
  return std::abs(analytic - numeric) / denom;
}

GradCheckReport GradCheck(ParameterSet<double> &params,
                          const std::function<Tensor<double>()> &loss,
                          const GradCheckOptions &options) {
  params.ZeroGrad();
  loss().Backward();
  std::vector<std::vector<double>> analytic;
  for (auto &p : params.params()) {
    auto g = p.tensor.grad();
    analytic.emplace_back(p.tensor.size(), 0.0);
    std::copy(g.begin(), g.end(), analytic.back().begin());
  }
  params.ZeroGrad();

  GradCheckReport report;
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto &p = params.params()[k];
    auto v = p.tensor.mutable_values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double saved = v[i];
      v[i] = saved + options.step;
      const double up = loss().item();
      v[i] = saved - options.step;
      const double down = loss().item();
      v[i] = saved;
      const double numeric = (up - down) / (2 * options.step);
      const double err = RelativeError(analytic[k][i], numeric, options.floor);
      ++report.checked;
      if (err > report.max_relative_error || report.checked == 1) {
        report.max_relative_error = err;
        report.worst_parameter = p.name;
        report.worst_index = i;
        report.worst_analytic = analytic[k][i];
        report.worst_numeric = numeric;
      }
    }
  }
  report.passed = report.max_relative_error < options.tolerance;
  return report;
}

}  // namespace sacoie::autodiff

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

#include "sacoie/tensor/optimizer.h"

#include <cmath>
#include <stdexcept>

namespace sacoie::autodiff {

template <typename Real>
double SgdStep(ParameterSet<Real> &params, const SgdConfig &config) {
  double sq = 0.0;
  for (const auto &p : params.params()) {
    for (Real g : p.tensor.grad()) {
      if (!std::isfinite(g)) {
        throw std::domain_error("non-finite gradient in parameter " + p.name);
      }
      sq += static_cast<double>(g) * g;
    }
  }
  const double norm = std::sqrt(sq);
  double scale = config.learning_rate;
  if (config.clip_norm > 0 && norm > config.clip_norm) scale *= config.clip_norm / norm;

  for (auto &p : params.params()) {
    auto g = p.tensor.grad();
    if (g.empty()) continue;
    auto v = p.tensor.mutable_values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = static_cast<Real>(v[i] - scale * g[i]);
    }
  }
  params.CheckFinite();
  params.ZeroGrad();
  return norm;
}

template double SgdStep(ParameterSet<float> &, const SgdConfig &);
template double SgdStep(ParameterSet<double> &, const SgdConfig &);

}  // namespace sacoie::autodiff

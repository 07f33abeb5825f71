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

// Central finite-difference check of analytic gradients.

#ifndef SACOIE_TENSOR_GRAD_CHECK_H_
#define SACOIE_TENSOR_GRAD_CHECK_H_

#include <cstddef>
#include <functional>
#include <string>

#include "sacoie/tensor/parameters.h"
#include "sacoie/tensor/tensor.h"

namespace sacoie::autodiff {

struct GradCheckOptions {
  double step = 1e-5;
  double tolerance = 1e-4;
  // Denominator floor so gradients that are zero on both sides compare by
  // absolute difference.
  double floor = 1e-6;
};

struct GradCheckReport {
  bool passed = true;
  std::size_t checked = 0;
  double max_relative_error = 0.0;
  std::string worst_parameter;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
};

// |a - n| / max(floor, |a|, |n|)
double RelativeError(double analytic, double numeric, double floor = 1e-6);

// Builds the loss with `loss` (which must read the current values of
// `params`), backpropagates once, then perturbs every scalar of every
// parameter by +-step and compares.
GradCheckReport GradCheck(ParameterSet<double> &params,
                          const std::function<Tensor<double>()> &loss,
                          const GradCheckOptions &options = {});

}  // namespace sacoie::autodiff

#endif  // SACOIE_TENSOR_GRAD_CHECK_H_

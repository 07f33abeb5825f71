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

// Plain SGD with global-norm gradient clipping.

#ifndef SACOIE_TENSOR_OPTIMIZER_H_
#define SACOIE_TENSOR_OPTIMIZER_H_

#include "sacoie/tensor/parameters.h"

namespace sacoie::autodiff {

struct SgdConfig {
  double learning_rate = 0.05;
  // Gradients are rescaled when their global L2 norm exceeds this; <= 0
  // disables clipping.
  double clip_norm = 5.0;
};

// p <- p - lr * g over every parameter, then zeroes the gradients. Returns
// the global gradient norm before clipping. Throws std::domain_error on a
// non-finite gradient or updated value.
template <typename Real>
double SgdStep(ParameterSet<Real> &params, const SgdConfig &config);

}  // namespace sacoie::autodiff

#endif  // SACOIE_TENSOR_OPTIMIZER_H_

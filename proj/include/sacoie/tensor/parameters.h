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

// Named trainable tensors and their initialization.

#ifndef SACOIE_TENSOR_PARAMETERS_H_
#define SACOIE_TENSOR_PARAMETERS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/tensor/tensor.h"

namespace sacoie::autodiff {

enum class Init {
  kZeros,
  // uniform(-1/sqrt(fan_in), +1/sqrt(fan_in))
  kUniformFanIn,
};

template <typename Real>
struct Parameter {
  std::string name;
  Init init = Init::kZeros;
  std::size_t fan_in = 1;
  Tensor<Real> tensor;
};

// Ordered collection of parameters. Insertion order fixes the order of
// initialization draws and of checkpoint records.
template <typename Real>
class ParameterSet {
 public:
  // Adds a zero-filled parameter; names must be unique.
  Tensor<Real> &Add(std::string name, std::size_t rows, std::size_t cols,
                    Init init = Init::kZeros, std::size_t fan_in = 0);

  // Fills every parameter per its Init from a generator seeded with `seed`.
  void Initialize(std::uint64_t seed);

  // Throws std::out_of_range for unknown names.
  const Tensor<Real> &Get(std::string_view name) const;
  Tensor<Real> &Get(std::string_view name);
  bool Contains(std::string_view name) const;

  std::vector<Parameter<Real>> &params() { return params_; }
  const std::vector<Parameter<Real>> &params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  // Total scalar count.
  std::size_t ScalarCount() const;

  void ZeroGrad();
  // Throws std::domain_error naming the first parameter with a NaN or Inf.
  void CheckFinite() const;

 private:
  std::vector<Parameter<Real>> params_;
};

// Copy of `from` with values converted to another scalar type. Gradients
// are not copied.
template <typename To, typename From>
ParameterSet<To> Cast(const ParameterSet<From> &from) {
  ParameterSet<To> out;
  for (const auto &p : from.params()) {
    auto &t = out.Add(p.name, p.tensor.rows(), p.tensor.cols(), p.init, p.fan_in);
    auto src = p.tensor.values();
    auto dst = t.mutable_values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<To>(src[i]);
  }
  return out;
}

}  // namespace sacoie::autodiff

#endif  // SACOIE_TENSOR_PARAMETERS_H_

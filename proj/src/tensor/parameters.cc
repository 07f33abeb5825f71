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

#include "sacoie/tensor/parameters.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace sacoie::autodiff {

template <typename Real>
Tensor<Real> &ParameterSet<Real>::Add(std::string name, std::size_t rows,
                                      std::size_t cols, Init init,
                                      std::size_t fan_in) {
  if (Contains(name)) throw std::invalid_argument("duplicate parameter " + name);
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("parameter " + name + " has an empty shape");
  }
  Parameter<Real> p;
  p.name = std::move(name);
  p.init = init;
  p.fan_in = fan_in == 0 ? rows : fan_in;
  p.tensor = Tensor<Real>::Zeros(rows, cols, /*requires_grad=*/true);
  params_.push_back(std::move(p));
  return params_.back().tensor;
}

template <typename Real>
void ParameterSet<Real>::Initialize(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto &p : params_) {
    auto v = p.tensor.mutable_values();
    if (p.init == Init::kZeros) {
      std::fill(v.begin(), v.end(), Real(0));
      continue;
    }
    const double bound = 1.0 / std::sqrt(static_cast<double>(p.fan_in));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (auto &x : v) x = static_cast<Real>(dist(rng));
  }
}

template <typename Real>
const Tensor<Real> &ParameterSet<Real>::Get(std::string_view name) const {
  for (const auto &p : params_) {
    if (p.name == name) return p.tensor;
  }
  throw std::out_of_range("unknown parameter " + std::string(name));
}

template <typename Real>
Tensor<Real> &ParameterSet<Real>::Get(std::string_view name) {
  return const_cast<Tensor<Real> &>(std::as_const(*this).Get(name));
}

template <typename Real>
bool ParameterSet<Real>::Contains(std::string_view name) const {
  return std::any_of(params_.begin(), params_.end(),
                     [&](const Parameter<Real> &p) { return p.name == name; });
}

template <typename Real>
std::size_t ParameterSet<Real>::ScalarCount() const {
  std::size_t n = 0;
  for (const auto &p : params_) n += p.tensor.size();
  return n;
}

template <typename Real>
void ParameterSet<Real>::ZeroGrad() {
  for (auto &p : params_) p.tensor.ZeroGrad();
}

template <typename Real>
void ParameterSet<Real>::CheckFinite() const {
  for (const auto &p : params_) {
    for (Real v : p.tensor.values()) {
      if (!std::isfinite(v)) {
        throw std::domain_error("non-finite value in parameter " + p.name);
      }
    }
  }
}

template class ParameterSet<float>;
template class ParameterSet<double>;

}  // namespace sacoie::autodiff

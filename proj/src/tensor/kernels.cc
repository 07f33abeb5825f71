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

#include "sacoie/tensor/kernels.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sacoie::kernels {
namespace {

template <typename Real>
void StoreRow(const double *acc, Real *c, std::size_t n, bool accumulate) {
  if (accumulate) {
    for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<Real>(c[j] + acc[j]);
  } else {
    for (std::size_t j = 0; j < n; ++j) c[j] = static_cast<Real>(acc[j]);
  }
}

template <typename Real>
void MatMulRow(const Real *a, const Real *b, Real *c, std::size_t i,
               std::size_t k, std::size_t n, bool accumulate, double *acc) {
  std::fill(acc, acc + n, 0.0);
  const Real *arow = a + i * k;
  for (std::size_t p = 0; p < k; ++p) {
    const double av = arow[p];
    if (av == 0.0) continue;
    const Real *brow = b + p * n;
    for (std::size_t j = 0; j < n; ++j) acc[j] += av * brow[j];
  }
  StoreRow(acc, c + i * n, n, accumulate);
}

template <typename Real>
void MatMulTransBRow(const Real *a, const Real *b, Real *c, std::size_t i,
                     std::size_t k, std::size_t n, bool accumulate, double *acc) {
  const Real *arow = a + i * k;
  for (std::size_t j = 0; j < n; ++j) {
    const Real *brow = b + j * k;
    double s = 0.0;
    for (std::size_t p = 0; p < k; ++p) s += static_cast<double>(arow[p]) * brow[p];
    acc[j] = s;
  }
  StoreRow(acc, c + i * n, n, accumulate);
}

template <typename Real>
void MatMulTransARow(const Real *a, const Real *b, Real *c, std::size_t i,
                     std::size_t m, std::size_t k, std::size_t n, bool accumulate,
                     double *acc) {
  std::fill(acc, acc + n, 0.0);
  for (std::size_t p = 0; p < k; ++p) {
    const double av = a[p * m + i];
    if (av == 0.0) continue;
    const Real *brow = b + p * n;
    for (std::size_t j = 0; j < n; ++j) acc[j] += av * brow[j];
  }
  StoreRow(acc, c + i * n, n, accumulate);
}

template <typename Real>
void SoftmaxRow(const Real *x, Real *y, std::size_t cols, const std::uint8_t *mask) {
  double max = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cols; ++j) {
    if (mask == nullptr || mask[j]) max = std::max(max, static_cast<double>(x[j]));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (mask == nullptr || mask[j]) sum += std::exp(static_cast<double>(x[j]) - max);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    y[j] = (mask == nullptr || mask[j])
               ? static_cast<Real>(std::exp(static_cast<double>(x[j]) - max) / sum)
               : Real(0);
  }
}

}  // namespace

namespace serial {

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate) {
  std::vector<double> acc(n);
  for (std::size_t i = 0; i < m; ++i) MatMulRow(a, b, c, i, k, n, accumulate, acc.data());
}

template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
  std::vector<double> acc(n);
  for (std::size_t i = 0; i < m; ++i) {
    MatMulTransBRow(a, b, c, i, k, n, accumulate, acc.data());
  }
}

template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
  std::vector<double> acc(n);
  for (std::size_t i = 0; i < m; ++i) {
    MatMulTransARow(a, b, c, i, m, k, n, accumulate, acc.data());
  }
}

template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask) {
  for (std::size_t i = 0; i < rows; ++i) {
    SoftmaxRow(x + i * cols, y + i * cols, cols, mask ? mask + i * cols : nullptr);
  }
}

}  // namespace serial

namespace parallel {

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate) {
#pragma omp parallel
  {
    std::vector<double> acc(n);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < m; ++i) {
      MatMulRow(a, b, c, i, k, n, accumulate, acc.data());
    }
  }
}

template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
#pragma omp parallel
  {
    std::vector<double> acc(n);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < m; ++i) {
      MatMulTransBRow(a, b, c, i, k, n, accumulate, acc.data());
    }
  }
}

template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
#pragma omp parallel
  {
    std::vector<double> acc(n);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < m; ++i) {
      MatMulTransARow(a, b, c, i, m, k, n, accumulate, acc.data());
    }
  }
}

template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask) {
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < rows; ++i) {
    SoftmaxRow(x + i * cols, y + i * cols, cols, mask ? mask + i * cols : nullptr);
  }
}

}  // namespace parallel

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate) {
  if (m > 1 && m * k * n >= kParallelThreshold) {
    parallel::MatMul(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMul(a, b, c, m, k, n, accumulate);
  }
}

template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
  if (m > 1 && m * k * n >= kParallelThreshold) {
    parallel::MatMulTransB(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMulTransB(a, b, c, m, k, n, accumulate);
  }
}

template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate) {
  if (m > 1 && m * k * n >= kParallelThreshold) {
    parallel::MatMulTransA(a, b, c, m, k, n, accumulate);
  } else {
    serial::MatMulTransA(a, b, c, m, k, n, accumulate);
  }
}

template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask) {
  if (rows > 1 && rows * cols >= kParallelThreshold) {
    parallel::SoftmaxRows(x, y, rows, cols, mask);
  } else {
    serial::SoftmaxRows(x, y, rows, cols, mask);
  }
}

#define SACOIE_INSTANTIATE_KERNELS(NS, Real)                                   \
  template void NS MatMul<Real>(const Real *, const Real *, Real *,            \
                                std::size_t, std::size_t, std::size_t, bool);  \
  template void NS MatMulTransB<Real>(const Real *, const Real *, Real *,      \
                                      std::size_t, std::size_t, std::size_t,   \
                                      bool);                                   \
  template void NS MatMulTransA<Real>(const Real *, const Real *, Real *,      \
                                      std::size_t, std::size_t, std::size_t,   \
                                      bool);                                   \
  template void NS SoftmaxRows<Real>(const Real *, Real *, std::size_t,        \
                                     std::size_t, const std::uint8_t *);

SACOIE_INSTANTIATE_KERNELS(serial::, float)
SACOIE_INSTANTIATE_KERNELS(serial::, double)
SACOIE_INSTANTIATE_KERNELS(parallel::, float)
SACOIE_INSTANTIATE_KERNELS(parallel::, double)
SACOIE_INSTANTIATE_KERNELS(, float)
SACOIE_INSTANTIATE_KERNELS(, double)

#undef SACOIE_INSTANTIATE_KERNELS

}  // namespace sacoie::kernels

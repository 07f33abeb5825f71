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

// Dense row-major kernels. Each kernel has a serial reference and an OpenMP
// version that splits work over output rows; both accumulate every output
// element in the same order (in double), so their results are bit-identical.

#ifndef SACOIE_TENSOR_KERNELS_H_
#define SACOIE_TENSOR_KERNELS_H_

#include <cstddef>
#include <cstdint>

namespace sacoie::kernels {

// c[m x n] (+)= a[m x k] * b[k x n]
// c[m x n] (+)= a[m x k] * b[n x k]^T          (TransB)
// c[m x n] (+)= a[k x m]^T * b[k x n]          (TransA)
// Row softmax; entries with mask == 0 are excluded and set to 0.

namespace serial {

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask);

}  // namespace serial

namespace parallel {

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask);

}  // namespace parallel

// Work (multiply-adds) above which the dispatchers below use the OpenMP
// kernels.
inline constexpr std::size_t kParallelThreshold = 1 << 16;

template <typename Real>
void MatMul(const Real *a, const Real *b, Real *c, std::size_t m, std::size_t k,
            std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransB(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void MatMulTransA(const Real *a, const Real *b, Real *c, std::size_t m,
                  std::size_t k, std::size_t n, bool accumulate);
template <typename Real>
void SoftmaxRows(const Real *x, Real *y, std::size_t rows, std::size_t cols,
                 const std::uint8_t *mask = nullptr);

}  // namespace sacoie::kernels

#endif  // SACOIE_TENSOR_KERNELS_H_

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

#include "sacoie/tensor/tensor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "sacoie/tensor/kernels.h"

namespace sacoie::autodiff {

template <typename Real>
std::span<Real> TensorNode<Real>::GradBuffer() {
  if (grad.size() != size()) grad.assign(size(), Real(0));
  return grad;
}

template <typename Real>
Tensor<Real>::Tensor(std::size_t rows, std::size_t cols)
    : Tensor(rows, cols, std::vector<Real>(rows * cols)) {}

template <typename Real>
Tensor<Real>::Tensor(std::size_t rows, std::size_t cols, std::vector<Real> values,
                     bool requires_grad)
    : node_(std::make_shared<Node>()) {
  if (values.size() != rows * cols) {
    throw std::invalid_argument("tensor data length does not match shape");
  }
  node_->rows = rows;
  node_->cols = cols;
  node_->value = std::move(values);
  node_->requires_grad = requires_grad;
}

template <typename Real>
Tensor<Real> Tensor<Real>::FromOp(std::size_t rows, std::size_t cols,
                                  std::vector<Real> values,
                                  std::vector<Tensor> parents, BackwardFn backward) {
  Tensor out(rows, cols, std::move(values));
  for (const auto &p : parents) {
    out.node_->requires_grad |= p.requires_grad();
  }
  if (out.node_->requires_grad) {
    for (auto &p : parents) out.node_->parents.push_back(p.node_);
    out.node_->backward = std::move(backward);
  }
  return out;
}

template <typename Real>
void Tensor<Real>::ZeroGrad() {
  std::fill(node_->grad.begin(), node_->grad.end(), Real(0));
}

template <typename Real>
void Tensor<Real>::Backward() const {
  if (size() != 1) throw std::invalid_argument("Backward() needs a 1x1 tensor");
  if (!requires_grad()) return;

  // Post-order DFS gives a topological order (parents before children).
  std::vector<Node *> order;
  std::unordered_set<Node *> seen;
  std::vector<std::pair<Node *, std::size_t>> stack = {{node_.get(), 0}};
  seen.insert(node_.get());
  while (!stack.empty()) {
    auto &[node, next] = stack.back();
    if (next < node->parents.size()) {
      Node *p = node->parents[next++].get();
      if (p->requires_grad && seen.insert(p).second) stack.push_back({p, 0});
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  for (Node *n : order) {
    if (n->backward) std::fill(n->grad.begin(), n->grad.end(), Real(0));
  }
  node_->GradBuffer()[0] += Real(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if ((*it)->backward) (*it)->backward(**it);
  }
}

namespace {

template <typename Real>
void CheckFinite(const std::vector<Real> &v, const char *op) {
  for (Real x : v) {
    if (!std::isfinite(x)) {
      throw std::domain_error(std::string("non-finite value in ") + op);
    }
  }
}

[[noreturn]] void ShapeError(const char *op, std::size_t r1, std::size_t c1,
                             std::size_t r2, std::size_t c2) {
  throw std::invalid_argument(std::string(op) + ": incompatible shapes " +
                              std::to_string(r1) + "x" + std::to_string(c1) +
                              " and " + std::to_string(r2) + "x" +
                              std::to_string(c2));
}

// Grad buffer of parent `i` when it takes part in backprop, else empty.
template <typename Real>
std::span<Real> ParentGrad(TensorNode<Real> &self, std::size_t i) {
  auto &p = *self.parents[i];
  return p.requires_grad ? p.GradBuffer() : std::span<Real>{};
}

}  // namespace

template <typename Real>
Tensor<Real> MatMul(const Tensor<Real> &a, const Tensor<Real> &b) {
  if (a.cols() != b.rows()) ShapeError("MatMul", a.rows(), a.cols(), b.rows(), b.cols());
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  std::vector<Real> out(m * n);
  kernels::MatMul(a.values().data(), b.values().data(), out.data(), m, k, n, false);
  CheckFinite(out, "MatMul");
  return Tensor<Real>::FromOp(m, n, std::move(out), {a, b}, [m, k, n](TensorNode<Real> &self) {
    const auto &av = self.parents[0]->value;
    const auto &bv = self.parents[1]->value;
    if (auto ga = ParentGrad(self, 0); !ga.empty()) {
      kernels::MatMulTransB(self.grad.data(), bv.data(), ga.data(), m, n, k, true);
    }
    if (auto gb = ParentGrad(self, 1); !gb.empty()) {
      kernels::MatMulTransA(av.data(), self.grad.data(), gb.data(), k, m, n, true);
    }
  });
}

template <typename Real>
Tensor<Real> MatMulTransB(const Tensor<Real> &a, const Tensor<Real> &b) {
  if (a.cols() != b.cols()) {
    ShapeError("MatMulTransB", a.rows(), a.cols(), b.rows(), b.cols());
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
  std::vector<Real> out(m * n);
  kernels::MatMulTransB(a.values().data(), b.values().data(), out.data(), m, k, n, false);
  CheckFinite(out, "MatMulTransB");
  return Tensor<Real>::FromOp(m, n, std::move(out), {a, b}, [m, k, n](TensorNode<Real> &self) {
    const auto &av = self.parents[0]->value;
    const auto &bv = self.parents[1]->value;
    // C = A B^T: dA = dC B, dB = dC^T A.
    if (auto ga = ParentGrad(self, 0); !ga.empty()) {
      kernels::MatMul(self.grad.data(), bv.data(), ga.data(), m, n, k, true);
    }
    if (auto gb = ParentGrad(self, 1); !gb.empty()) {
      kernels::MatMulTransA(self.grad.data(), av.data(), gb.data(), n, m, k, true);
    }
  });
}

template <typename Real>
Tensor<Real> Add(const Tensor<Real> &a, const Tensor<Real> &b) {
  const bool broadcast = b.rows() == 1 && a.rows() != 1 && b.cols() == a.cols();
  if (!broadcast && (a.rows() != b.rows() || a.cols() != b.cols())) {
    ShapeError("Add", a.rows(), a.cols(), b.rows(), b.cols());
  }
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<Real> out(a.values().begin(), a.values().end());
  const auto bv = b.values();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bv[broadcast ? i % cols : i];
  CheckFinite(out, "Add");
  return Tensor<Real>::FromOp(rows, cols, std::move(out), {a, b},
                              [broadcast, cols](TensorNode<Real> &self) {
    if (auto ga = ParentGrad(self, 0); !ga.empty()) {
      for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += self.grad[i];
    }
    if (auto gb = ParentGrad(self, 1); !gb.empty()) {
      for (std::size_t i = 0; i < self.grad.size(); ++i) {
        gb[broadcast ? i % cols : i] += self.grad[i];
      }
    }
  });
}

template <typename Real>
Tensor<Real> Scale(const Tensor<Real> &a, Real factor) {
  std::vector<Real> out(a.values().begin(), a.values().end());
  for (auto &v : out) v *= factor;
  CheckFinite(out, "Scale");
  return Tensor<Real>::FromOp(a.rows(), a.cols(), std::move(out), {a},
                              [factor](TensorNode<Real> &self) {
    auto ga = ParentGrad(self, 0);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += factor * self.grad[i];
  });
}

template <typename Real>
Tensor<Real> Sum(const Tensor<Real> &a) {
  double s = 0.0;
  for (Real v : a.values()) s += v;
  std::vector<Real> out = {static_cast<Real>(s)};
  CheckFinite(out, "Sum");
  return Tensor<Real>::FromOp(1, 1, std::move(out), {a}, [](TensorNode<Real> &self) {
    auto ga = ParentGrad(self, 0);
    for (auto &g : ga) g += self.grad[0];
  });
}

template <typename Real>
Tensor<Real> Concat(const Tensor<Real> &a, const Tensor<Real> &b) {
  if (a.rows() != b.rows()) ShapeError("Concat", a.rows(), a.cols(), b.rows(), b.cols());
  const std::size_t rows = a.rows(), ca = a.cols(), cb = b.cols(), cols = ca + cb;
  std::vector<Real> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(a.values().data() + r * ca, ca, out.data() + r * cols);
    std::copy_n(b.values().data() + r * cb, cb, out.data() + r * cols + ca);
  }
  return Tensor<Real>::FromOp(rows, cols, std::move(out), {a, b},
                              [rows, ca, cb, cols](TensorNode<Real> &self) {
    if (auto ga = ParentGrad(self, 0); !ga.empty()) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < ca; ++j) ga[r * ca + j] += self.grad[r * cols + j];
    }
    if (auto gb = ParentGrad(self, 1); !gb.empty()) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < cb; ++j) gb[r * cb + j] += self.grad[r * cols + ca + j];
    }
  });
}

template <typename Real>
Tensor<Real> ConcatRows(std::span<const Tensor<Real>> parts) {
  if (parts.empty()) throw std::invalid_argument("ConcatRows: no inputs");
  const std::size_t cols = parts[0].cols();
  std::size_t rows = 0;
  std::vector<std::size_t> offsets;
  for (const auto &p : parts) {
    if (p.cols() != cols) ShapeError("ConcatRows", parts[0].rows(), cols, p.rows(), p.cols());
    offsets.push_back(rows * cols);
    rows += p.rows();
  }
  std::vector<Real> out;
  out.reserve(rows * cols);
  for (const auto &p : parts) out.insert(out.end(), p.values().begin(), p.values().end());
  return Tensor<Real>::FromOp(
      rows, cols, std::move(out), std::vector<Tensor<Real>>(parts.begin(), parts.end()),
      [offsets](TensorNode<Real> &self) {
        for (std::size_t i = 0; i < self.parents.size(); ++i) {
          auto g = ParentGrad(self, i);
          for (std::size_t j = 0; j < g.size(); ++j) g[j] += self.grad[offsets[i] + j];
        }
      });
}

template <typename Real>
Tensor<Real> Relu(const Tensor<Real> &a) {
  std::vector<Real> out(a.values().begin(), a.values().end());
  for (auto &v : out) v = v > Real(0) ? v : Real(0);
  return Tensor<Real>::FromOp(a.rows(), a.cols(), std::move(out), {a},
                              [](TensorNode<Real> &self) {
    auto ga = ParentGrad(self, 0);
    const auto &x = self.parents[0]->value;
    for (std::size_t i = 0; i < ga.size(); ++i) {
      if (x[i] > Real(0)) ga[i] += self.grad[i];
    }
  });
}

namespace {

// y = softmax(x) row-wise: dx_j = y_j (dy_j - sum_k y_k dy_k).
template <typename Real>
void SoftmaxBackward(TensorNode<Real> &self) {
  auto ga = ParentGrad(self, 0);
  const std::size_t rows = self.rows, cols = self.cols;
  for (std::size_t r = 0; r < rows; ++r) {
    const Real *y = self.value.data() + r * cols;
    const Real *dy = self.grad.data() + r * cols;
    double dot = 0.0;
    for (std::size_t j = 0; j < cols; ++j) dot += static_cast<double>(y[j]) * dy[j];
    for (std::size_t j = 0; j < cols; ++j) {
      ga[r * cols + j] += static_cast<Real>(y[j] * (dy[j] - dot));
    }
  }
}

}  // namespace

template <typename Real>
Tensor<Real> Softmax(const Tensor<Real> &a) {
  std::vector<Real> out(a.size());
  kernels::SoftmaxRows(a.values().data(), out.data(), a.rows(), a.cols());
  CheckFinite(out, "Softmax");
  return Tensor<Real>::FromOp(a.rows(), a.cols(), std::move(out), {a},
                              SoftmaxBackward<Real>);
}

template <typename Real>
Tensor<Real> MaskedSoftmax(const Tensor<Real> &a, std::span<const std::uint8_t> mask) {
  if (mask.size() != a.size()) {
    throw std::invalid_argument("MaskedSoftmax: mask size does not match tensor");
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = mask.subspan(r * a.cols(), a.cols());
    if (std::none_of(row.begin(), row.end(), [](std::uint8_t m) { return m != 0; })) {
      throw std::invalid_argument("MaskedSoftmax: row " + std::to_string(r) +
                                  " has no unmasked entry");
    }
  }
  std::vector<Real> out(a.size());
  kernels::SoftmaxRows(a.values().data(), out.data(), a.rows(), a.cols(), mask.data());
  CheckFinite(out, "MaskedSoftmax");
  // Masked outputs are exactly 0, so the unmasked backward formula applies.
  return Tensor<Real>::FromOp(a.rows(), a.cols(), std::move(out), {a},
                              SoftmaxBackward<Real>);
}

template <typename Real>
Tensor<Real> Log(const Tensor<Real> &a) {
  std::vector<Real> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::log(a.values()[i]);
  CheckFinite(out, "Log");
  return Tensor<Real>::FromOp(a.rows(), a.cols(), std::move(out), {a},
                              [](TensorNode<Real> &self) {
    auto ga = ParentGrad(self, 0);
    const auto &x = self.parents[0]->value;
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += self.grad[i] / x[i];
  });
}

template <typename Real>
Tensor<Real> MeanRows(const Tensor<Real> &a, std::size_t begin, std::size_t end) {
  if (begin >= end || end > a.rows()) {
    throw std::invalid_argument("MeanRows: bad row range");
  }
  const std::size_t cols = a.cols();
  const double inv = 1.0 / static_cast<double>(end - begin);
  std::vector<Real> out(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t r = begin; r < end; ++r) s += a.values()[r * cols + j];
    out[j] = static_cast<Real>(s * inv);
  }
  return Tensor<Real>::FromOp(1, cols, std::move(out), {a},
                              [begin, end, cols, inv](TensorNode<Real> &self) {
    auto ga = ParentGrad(self, 0);
    for (std::size_t r = begin; r < end; ++r)
      for (std::size_t j = 0; j < cols; ++j)
        ga[r * cols + j] += static_cast<Real>(self.grad[j] * inv);
  });
}

template <typename Real>
Tensor<Real> GatherRows(const Tensor<Real> &table, std::span<const int> indices) {
  const std::size_t cols = table.cols();
  std::vector<int> idx(indices.begin(), indices.end());
  std::vector<Real> out(idx.size() * cols);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= table.rows()) {
      throw std::invalid_argument("GatherRows: index out of range");
    }
    std::copy_n(table.values().data() + idx[i] * cols, cols, out.data() + i * cols);
  }
  return Tensor<Real>::FromOp(idx.size(), cols, std::move(out), {table},
                              [idx, cols](TensorNode<Real> &self) {
    auto g = ParentGrad(self, 0);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) g[idx[i] * cols + j] += self.grad[i * cols + j];
  });
}

template <typename Real>
Tensor<Real> CrossEntropy(const Tensor<Real> &probs, std::span<const int> targets) {
  if (targets.size() != probs.rows()) {
    throw std::invalid_argument("CrossEntropy: one target per row required");
  }
  constexpr Real kFloor = std::numeric_limits<Real>::min();
  const std::size_t cols = probs.cols();
  std::vector<int> t(targets.begin(), targets.end());
  double loss = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || static_cast<std::size_t>(t[i]) >= cols) {
      throw std::invalid_argument("CrossEntropy: target out of range");
    }
    loss -= std::log(std::max(probs.values()[i * cols + t[i]], kFloor));
  }
  std::vector<Real> out = {static_cast<Real>(loss)};
  CheckFinite(out, "CrossEntropy");
  return Tensor<Real>::FromOp(1, 1, std::move(out), {probs}, [t, cols](TensorNode<Real> &self) {
    auto g = ParentGrad(self, 0);
    const auto &p = self.parents[0]->value;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Real pi = p[i * cols + t[i]];
      if (pi >= kFloor) g[i * cols + t[i]] -= self.grad[0] / pi;
    }
  });
}

template <typename Real>
Tensor<Real> CrossEntropy(const Tensor<Real> &probs, const Tensor<Real> &targets) {
  if (probs.rows() != targets.rows() || probs.cols() != targets.cols()) {
    ShapeError("CrossEntropy", probs.rows(), probs.cols(), targets.rows(), targets.cols());
  }
  constexpr Real kFloor = std::numeric_limits<Real>::min();
  std::vector<Real> y(targets.values().begin(), targets.values().end());
  double loss = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] != Real(0)) loss -= y[i] * std::log(std::max(probs.values()[i], kFloor));
  }
  std::vector<Real> out = {static_cast<Real>(loss)};
  CheckFinite(out, "CrossEntropy");
  return Tensor<Real>::FromOp(1, 1, std::move(out), {probs}, [y](TensorNode<Real> &self) {
    auto g = ParentGrad(self, 0);
    const auto &p = self.parents[0]->value;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] != Real(0) && p[i] >= kFloor) g[i] -= self.grad[0] * y[i] / p[i];
    }
  });
}

#define SACOIE_INSTANTIATE_TENSOR(Real)                                          \
  template struct TensorNode<Real>;                                              \
  template class Tensor<Real>;                                                   \
  template Tensor<Real> MatMul(const Tensor<Real> &, const Tensor<Real> &);      \
  template Tensor<Real> MatMulTransB(const Tensor<Real> &, const Tensor<Real> &);\
  template Tensor<Real> Add(const Tensor<Real> &, const Tensor<Real> &);         \
  template Tensor<Real> Scale(const Tensor<Real> &, Real);                       \
  template Tensor<Real> Sum(const Tensor<Real> &);                               \
  template Tensor<Real> Concat(const Tensor<Real> &, const Tensor<Real> &);      \
  template Tensor<Real> ConcatRows(std::span<const Tensor<Real>>);               \
  template Tensor<Real> Relu(const Tensor<Real> &);                              \
  template Tensor<Real> Softmax(const Tensor<Real> &);                           \
  template Tensor<Real> MaskedSoftmax(const Tensor<Real> &,                      \
                                     std::span<const std::uint8_t>);             \
  template Tensor<Real> Log(const Tensor<Real> &);                               \
  template Tensor<Real> MeanRows(const Tensor<Real> &, std::size_t, std::size_t);\
  template Tensor<Real> GatherRows(const Tensor<Real> &, std::span<const int>);  \
  template Tensor<Real> CrossEntropy(const Tensor<Real> &, std::span<const int>);\
  template Tensor<Real> CrossEntropy(const Tensor<Real> &, const Tensor<Real> &);

SACOIE_INSTANTIATE_TENSOR(float)
SACOIE_INSTANTIATE_TENSOR(double)

#undef SACOIE_INSTANTIATE_TENSOR

}  // namespace sacoie::autodiff

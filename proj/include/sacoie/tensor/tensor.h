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

// Dense 2-D tensors with reverse-mode gradients.
//
// A Tensor is a shared handle to a node of a computation graph. Operations
// build new nodes that remember their inputs; Backward() on a 1x1 result
// walks the graph in reverse topological order and accumulates gradients
// into every tensor created with requires_grad (directly or through its
// inputs). Leaf gradients accumulate across Backward() calls until
// ZeroGrad().
//
// Everything is templated on the scalar type: models train in float, and
// gradient checks run the same code in double.

#ifndef SACOIE_TENSOR_TENSOR_H_
#define SACOIE_TENSOR_TENSOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace sacoie::autodiff {

template <typename Real>
struct TensorNode {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Real> value;
  std::vector<Real> grad;  // empty until first touched
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorNode>> parents;
  // Reads this node's grad and accumulates into parents that require grad.
  std::function<void(TensorNode &)> backward;

  std::size_t size() const { return rows * cols; }
  // Gradient buffer, zero-filled on first use.
  std::span<Real> GradBuffer();
};

template <typename Real>
class Tensor {
 public:
  using Node = TensorNode<Real>;
  using BackwardFn = std::function<void(Node &)>;

  Tensor() = default;
  // Zero-filled constant.
  Tensor(std::size_t rows, std::size_t cols);
  Tensor(std::size_t rows, std::size_t cols, std::vector<Real> values,
         bool requires_grad = false);

  static Tensor Scalar(Real v) { return Tensor(1, 1, std::vector<Real>{v}); }
  static Tensor Zeros(std::size_t rows, std::size_t cols, bool requires_grad) {
    return Tensor(rows, cols, std::vector<Real>(rows * cols), requires_grad);
  }

  // Result of a custom operation. `backward` runs only when some parent
  // requires grad.
  static Tensor FromOp(std::size_t rows, std::size_t cols, std::vector<Real> values,
                       std::vector<Tensor> parents, BackwardFn backward);

  bool defined() const { return node_ != nullptr; }
  std::size_t rows() const { return node_->rows; }
  std::size_t cols() const { return node_->cols; }
  std::size_t size() const { return node_->size(); }
  std::vector<std::size_t> shape() const { return {rows(), cols()}; }

  std::span<const Real> values() const { return node_->value; }
  std::span<Real> mutable_values() { return node_->value; }
  Real at(std::size_t r, std::size_t c) const { return node_->value[r * cols() + c]; }
  Real item() const { return node_->value.at(0); }

  bool requires_grad() const { return node_->requires_grad; }
  // Empty span when no gradient has been accumulated.
  std::span<const Real> grad() const { return node_->grad; }
  std::span<Real> mutable_grad() { return node_->GradBuffer(); }
  void ZeroGrad();

  // Backpropagates from this 1x1 tensor.
  void Backward() const;

  Node *node() const { return node_.get(); }
  const std::shared_ptr<Node> &shared_node() const { return node_; }

 private:
  std::shared_ptr<Node> node_;
};

// Operations. Shape mismatches throw std::invalid_argument; a non-finite
// forward value throws std::domain_error.

template <typename Real>
Tensor<Real> MatMul(const Tensor<Real> &a, const Tensor<Real> &b);
// a * b^T
template <typename Real>
Tensor<Real> MatMulTransB(const Tensor<Real> &a, const Tensor<Real> &b);
// Same shape, or `b` a 1 x cols row added to every row of `a`.
template <typename Real>
Tensor<Real> Add(const Tensor<Real> &a, const Tensor<Real> &b);
template <typename Real>
Tensor<Real> Scale(const Tensor<Real> &a, Real factor);
template <typename Real>
Tensor<Real> Sum(const Tensor<Real> &a);
// Concatenation along columns.
template <typename Real>
Tensor<Real> Concat(const Tensor<Real> &a, const Tensor<Real> &b);
// Stacks tensors with equal column counts.
template <typename Real>
Tensor<Real> ConcatRows(std::span<const Tensor<Real>> parts);
template <typename Real>
Tensor<Real> Relu(const Tensor<Real> &a);
template <typename Real>
Tensor<Real> Softmax(const Tensor<Real> &a);
// Row softmax over entries with mask != 0; the rest are 0. Every row needs
// at least one unmasked entry.
template <typename Real>
Tensor<Real> MaskedSoftmax(const Tensor<Real> &a, std::span<const std::uint8_t> mask);
template <typename Real>
Tensor<Real> Log(const Tensor<Real> &a);
// Mean of rows [begin, end) as a 1 x cols tensor.
template <typename Real>
Tensor<Real> MeanRows(const Tensor<Real> &a, std::size_t begin, std::size_t end);
// Rows of `table` selected by `indices` (embedding lookup).
template <typename Real>
Tensor<Real> GatherRows(const Tensor<Real> &table, std::span<const int> indices);
// -sum_i log probs[i, targets[i]]. Probabilities are floored at the
// smallest normal value before the log.
template <typename Real>
Tensor<Real> CrossEntropy(const Tensor<Real> &probs, std::span<const int> targets);
// -sum_ij targets[i, j] log probs[i, j] with constant targets.
template <typename Real>
Tensor<Real> CrossEntropy(const Tensor<Real> &probs, const Tensor<Real> &targets);

}  // namespace sacoie::autodiff

#endif  // SACOIE_TENSOR_TENSOR_H_

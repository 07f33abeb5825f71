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

// Model inputs shared by the chunker and the extractor.

#ifndef SACOIE_MODELS_INPUTS_H_
#define SACOIE_MODELS_INPUTS_H_

#include <string>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/io/errors.h"
#include "sacoie/tensor/tensor.h"

namespace sacoie {

// The sentence's embedding rows as a constant n x dim tensor. Throws
// InputError when they are missing or mis-sized.
template <typename Real>
autodiff::Tensor<Real> SentenceEmbeddings(const AnnotatedSentence &s, int dim) {
  if (!s.embeddings) throw InputError("sentence '" + s.id + "' has no embeddings");
  const DenseMatrix &m = *s.embeddings;
  if (m.cols != static_cast<std::size_t>(dim) || m.rows != s.tokens.size()) {
    throw InputError("sentence '" + s.id + "': embeddings are " + std::to_string(m.rows) +
                     "x" + std::to_string(m.cols) + ", expected " +
                     std::to_string(s.tokens.size()) + "x" + std::to_string(dim));
  }
  return autodiff::Tensor<Real>(m.rows, m.cols, std::vector<Real>(m.data.begin(), m.data.end()));
}

}  // namespace sacoie

#endif  // SACOIE_MODELS_INPUTS_H_

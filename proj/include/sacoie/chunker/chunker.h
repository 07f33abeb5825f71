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

// Sentence chunker: per-token boundary and chunk-type classification over
// contextual token embeddings plus a POS embedding, decoded into a chunk
// sequence.

#ifndef SACOIE_CHUNKER_CHUNKER_H_
#define SACOIE_CHUNKER_CHUNKER_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/io/conll2000.h"
#include "sacoie/models/training.h"
#include "sacoie/tensor/parameters.h"
#include "sacoie/tensor/tensor.h"

namespace sacoie {

inline constexpr char kChunkerKind[] = "sac-chunker";

struct ChunkerConfig {
  // Must equal the embedding width.
  int hidden_dim = 768;
  // Weight of the type loss.
  double alpha = 1.0;
  // Tokens with boundary probability >= threshold start a chunk.
  double boundary_threshold = 0.5;
};

// Parameters (row-major):
//   W_pos  (|pos_vocab| + 1) x d_h   row 0 is the unknown-tag row
//   W_b    d_h x 2, b_b 1 x 2        boundary head
//   W_t    d_h x c, b_t 1 x c        type head, c = inventory size
// Copies share parameter storage.
struct ChunkerModel {
  ChunkerConfig config;
  ChunkInventory inventory;
  std::vector<std::string> pos_vocab;  // sorted, unique
  autodiff::ParameterSet<float> params;

  // Builds zero-valued parameters; call params.Initialize(seed) to train.
  ChunkerModel(ChunkerConfig config, ChunkInventory inventory,
               std::vector<std::string> pos_vocab);

  // Row of W_pos for a tag; 0 when unknown.
  int PosIndex(std::string_view pos) const;
  int type_count() const { return static_cast<int>(inventory.types.size()); }
};

template <typename Real>
struct ChunkerOutputs {
  autodiff::Tensor<Real> boundary;  // n x 2, column 1 = P(boundary)
  autodiff::Tensor<Real> types;     // n x c
};

// Per-token probabilities detached from the graph.
struct ChunkTagging {
  std::vector<double> boundary;             // p^b per token
  std::vector<std::vector<double>> types;   // p^t per token
};

// Runs the model with `params` (the model's own, or a cast copy). Throws
// InputError when embeddings are missing or have the wrong width.
template <typename Real>
ChunkerOutputs<Real> ChunkerForward(const ChunkerModel &model,
                                    const autodiff::ParameterSet<Real> &params,
                                    const AnnotatedSentence &s);

// L_bound + alpha * L_type, summed over tokens. Gold boundary is 1 iff the
// token starts a chunk; gold type is its chunk's type.
template <typename Real>
autodiff::Tensor<Real> ChunkingLoss(const ChunkerOutputs<Real> &out,
                                    const ChunkSequence &gold,
                                    const ChunkInventory &inventory, double alpha);

// Gold targets as token-level class indices.
std::vector<int> BoundaryTargets(const ChunkSequence &gold);
std::vector<int> TypeTargets(const ChunkSequence &gold, const ChunkInventory &inventory);

ChunkTagging ToTagging(const ChunkerOutputs<float> &out);
ChunkTagging ToTagging(const ChunkerOutputs<double> &out);

// Token 0 always opens a chunk; each chunk takes the argmax of its summed
// type distributions, lowest index on ties.
ChunkSequence DecodeChunks(const ChunkTagging &tagging, const ChunkInventory &inventory,
                           double threshold = 0.5);

// Forward + decode with the model's own parameters.
ChunkSequence Chunk(const ChunkerModel &model, const AnnotatedSentence &s);

// Sorted unique POS tags of a corpus.
std::vector<std::string> PosVocabulary(std::span<const ChunkedSentence> corpus);

// Called after each epoch with the model so far; false stops training.
using ChunkerEpochCallback =
    std::function<bool(int epoch, double mean_loss, const ChunkerModel &model)>;

// Trains a fresh model on `corpus` (sentences need embeddings).
ChunkerModel TrainChunker(std::span<const ChunkedSentence> corpus,
                          const ChunkerConfig &config, const ChunkInventory &inventory,
                          const TrainConfig &train, TrainHistory *history = nullptr,
                          const ChunkerEpochCallback &on_epoch = nullptr);

void SaveChunker(std::ostream &out, const ChunkerModel &model);
ChunkerModel LoadChunker(std::istream &in, const std::string &source);

}  // namespace sacoie

#endif  // SACOIE_CHUNKER_CHUNKER_H_

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

// Chunk-level tuple extractor. For one relation indicator (verb) in a
// chunked sentence:
//   token vectors   x_i  = e_i + W_verb[i == verb]
//   chunk vectors   h^c  = mean of member x_i + W_type[type]
//   GCN             m_i  = h_i (+) l_i with l_i = W_dep[label_i]
//                   a_ij = e_ij exp(m_i . m_j) / sum_k e_ik exp(m_i . m_k)
//                   h^dep_i = ReLU(sum_j a_ij (h_j + W_l l_j + b))
//   tags            softmax([h^c (+) h^dep] W_o + b_o) per chunk
// and the chunk distributions are copied to member tokens for the loss.
// With several GCN layers, layer k+1 reads the h^dep of layer k.

#ifndef SACOIE_OIE_EXTRACTOR_H_
#define SACOIE_OIE_EXTRACTOR_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/graph/chunk_dep_graph.h"
#include "sacoie/io/tuples_jsonl.h"
#include "sacoie/models/training.h"
#include "sacoie/oie/tags.h"
#include "sacoie/tensor/parameters.h"
#include "sacoie/tensor/tensor.h"

namespace sacoie {

inline constexpr char kExtractorKind[] = "sac-oie-extractor";

struct OieConfig {
  // d_h: must equal the embedding width.
  int hidden_dim = 768;
  // d_l: dependency label embedding width.
  int label_dim = 400;
  int gcn_layers = 1;
};

// Parameters:
//   W_verb 2 x d_h, W_type |types| x d_h, W_dep (|labels| + 1) x d_l
//   (row 0 unknown label), per layer k: W_l<k> d_h x d_l, b<k> 1 x d_h,
//   W_o 2 d_h x kTagCount, b_o 1 x kTagCount.
// Copies share parameter storage.
struct OieModel {
  OieConfig config;
  ChunkInventory inventory;
  std::vector<std::string> dep_labels;  // sorted, unique
  autodiff::ParameterSet<float> params;

  OieModel(OieConfig config, ChunkInventory inventory, std::vector<std::string> dep_labels);

  // Row of W_dep; 0 when unknown.
  int LabelIndex(std::string_view label) const;
};

template <typename Real>
struct GcnOutput {
  autodiff::Tensor<Real> hidden;                // m x d_h, last layer
  std::vector<autodiff::Tensor<Real>> alpha;    // m x m per layer
};

template <typename Real>
struct OieOutputs {
  autodiff::Tensor<Real> chunk_encoding;  // h^c, m x d_h
  GcnOutput<Real> gcn;
  autodiff::Tensor<Real> chunk_probs;     // m x kTagCount
};

// h^c per chunk. Throws InputError for missing or mis-sized embeddings and
// std::out_of_range for a verb index outside the sentence.
template <typename Real>
autodiff::Tensor<Real> EncodeChunks(const OieModel &model,
                                    const autodiff::ParameterSet<Real> &params,
                                    const AnnotatedSentence &s, const ChunkSequence &cs,
                                    int verb_index);

// Throws std::invalid_argument when the graph and h^c disagree on the
// node count.
template <typename Real>
GcnOutput<Real> GcnForward(const OieModel &model, const autodiff::ParameterSet<Real> &params,
                           const autodiff::Tensor<Real> &chunk_encoding,
                           const ChunkDepGraph &graph);

template <typename Real>
OieOutputs<Real> OieForward(const OieModel &model, const autodiff::ParameterSet<Real> &params,
                            const AnnotatedSentence &s, const ChunkSequence &cs,
                            const ChunkDepGraph &graph, int verb_index);

// Row t is the distribution of the chunk containing token t.
template <typename Real>
autodiff::Tensor<Real> ProjectToTokens(const autodiff::Tensor<Real> &chunk_probs,
                                       const ChunkSequence &cs);

// Token-level cross-entropy summed over the sentence. Throws
// std::invalid_argument when the lengths differ.
template <typename Real>
autodiff::Tensor<Real> OieLoss(const autodiff::Tensor<Real> &token_probs,
                               std::span<const int> gold_token_tags);

// Detached rows of a probability tensor.
std::vector<std::vector<double>> Rows(const autodiff::Tensor<float> &t);
std::vector<std::vector<double>> Rows(const autodiff::Tensor<double> &t);

// One forward + decode pass per verb token, ordered by verb index.
std::vector<ExtractedTuple> ExtractSentence(const OieModel &model, const AnnotatedSentence &s,
                                            const ChunkSequence &cs, const ChunkDepGraph &graph);

// One training instance: a sentence, its chunks and graph, a relation
// indicator and the gold tags for it.
struct OieExample {
  AnnotatedSentence sentence;
  ChunkSequence chunks;
  ChunkDepGraph graph;
  int verb = 0;
  std::vector<int> chunk_tags;
  std::vector<int> token_tags;
};

struct OieExampleStats {
  GoldTagStats tags;
  // Verbs with no gold tuple, trained towards all-O.
  int negative = 0;
  // Tuples dropped because their verb already had one.
  int duplicate_verbs = 0;
};

// Builds one example per gold tuple plus one all-O example per remaining
// verb token. A tuple's relation indicator is its "verb" field, else the
// first verb token of its relation, else the relation's first token.
// Records and chunk sequences are matched by position and must agree on
// sentence ids.
std::vector<OieExample> BuildOieExamples(std::span<const TupleRecord> records,
                                         std::span<const ChunkSequence> chunks,
                                         OieExampleStats *stats = nullptr);

// Sorted labels of all chunk graphs in `examples`.
std::vector<std::string> DepLabelVocabulary(std::span<const OieExample> examples);

using OieEpochCallback =
    std::function<bool(int epoch, double mean_loss, const OieModel &model)>;

OieModel TrainOie(std::span<const OieExample> examples, const OieConfig &config,
                  const ChunkInventory &inventory, const TrainConfig &train,
                  TrainHistory *history = nullptr, const OieEpochCallback &on_epoch = nullptr);

// Fraction of tokens whose most probable projected tag equals the gold tag.
double TokenTagAccuracy(const OieModel &model, std::span<const OieExample> examples);

void SaveExtractor(std::ostream &out, const OieModel &model);
OieModel LoadExtractor(std::istream &in, const std::string &source);

}  // namespace sacoie

#endif  // SACOIE_OIE_EXTRACTOR_H_

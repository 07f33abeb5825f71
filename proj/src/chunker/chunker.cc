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

#include "sacoie/chunker/chunker.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "sacoie/io/errors.h"
#include "sacoie/models/inputs.h"
#include "sacoie/tensor/checkpoint.h"

namespace sacoie {

using autodiff::Init;
using autodiff::ParameterSet;
using autodiff::Tensor;

ChunkerModel::ChunkerModel(ChunkerConfig cfg, ChunkInventory inv,
                           std::vector<std::string> vocab)
    : config(cfg), inventory(std::move(inv)), pos_vocab(std::move(vocab)) {
  if (config.hidden_dim <= 0) throw std::invalid_argument("hidden_dim must be positive");
  if (!(config.alpha >= 0)) throw std::invalid_argument("alpha must be non-negative");
  if (inventory.types.empty()) throw std::invalid_argument("empty chunk inventory");
  std::sort(pos_vocab.begin(), pos_vocab.end());
  pos_vocab.erase(std::unique(pos_vocab.begin(), pos_vocab.end()), pos_vocab.end());
  const std::size_t d = config.hidden_dim;
  const std::size_t c = inventory.types.size();
  params.Add("W_pos", pos_vocab.size() + 1, d, Init::kUniformFanIn, d);
  params.Add("W_b", d, 2, Init::kUniformFanIn);
  params.Add("b_b", 1, 2);
  params.Add("W_t", d, c, Init::kUniformFanIn);
  params.Add("b_t", 1, c);
}

int ChunkerModel::PosIndex(std::string_view pos) const {
  auto it = std::lower_bound(pos_vocab.begin(), pos_vocab.end(), pos);
  return it != pos_vocab.end() && *it == pos ? static_cast<int>(it - pos_vocab.begin()) + 1
                                             : 0;
}

namespace {

template <typename Real>
ChunkTagging TaggingOf(const ChunkerOutputs<Real> &out) {
  ChunkTagging t;
  const std::size_t n = out.boundary.rows(), c = out.types.cols();
  for (std::size_t i = 0; i < n; ++i) {
    t.boundary.push_back(out.boundary.at(i, 1));
    auto row = out.types.values().subspan(i * c, c);
    t.types.emplace_back(row.begin(), row.end());
  }
  return t;
}

}  // namespace

template <typename Real>
ChunkerOutputs<Real> ChunkerForward(const ChunkerModel &model, const ParameterSet<Real> &params,
                                    const AnnotatedSentence &s) {
  if (s.tokens.empty()) throw InputError("sentence '" + s.id + "' has no tokens");
  Tensor<Real> e = SentenceEmbeddings<Real>(s, model.config.hidden_dim);
  std::vector<int> pos;
  for (const auto &tok : s.tokens) pos.push_back(model.PosIndex(tok.pos));
  Tensor<Real> h = Add(e, GatherRows(params.Get("W_pos"), pos));
  return {Softmax(Add(MatMul(h, params.Get("W_b")), params.Get("b_b"))),
          Softmax(Add(MatMul(h, params.Get("W_t")), params.Get("b_t")))};
}

std::vector<int> BoundaryTargets(const ChunkSequence &gold) {
  std::vector<int> y(gold.token_count(), 0);
  for (const auto &c : gold.chunks) y[c.start] = 1;
  return y;
}

std::vector<int> TypeTargets(const ChunkSequence &gold, const ChunkInventory &inventory) {
  std::vector<int> y(gold.token_count(), 0);
  for (const auto &c : gold.chunks) {
    const int idx = inventory.IndexOf(c.type);
    if (idx < 0) {
      throw InputError("chunk type '" + c.type + "' not in inventory " + inventory.name);
    }
    std::fill(y.begin() + c.start, y.begin() + c.end + 1, idx);
  }
  return y;
}

template <typename Real>
Tensor<Real> ChunkingLoss(const ChunkerOutputs<Real> &out, const ChunkSequence &gold,
                          const ChunkInventory &inventory, double alpha) {
  if (static_cast<std::size_t>(gold.token_count()) != out.boundary.rows()) {
    throw std::invalid_argument("gold chunks cover " + std::to_string(gold.token_count()) +
                                " tokens, tagging has " +
                                std::to_string(out.boundary.rows()));
  }
  auto bound = CrossEntropy(out.boundary, BoundaryTargets(gold));
  auto type = CrossEntropy(out.types, TypeTargets(gold, inventory));
  return Add(bound, Scale(type, static_cast<Real>(alpha)));
}

ChunkTagging ToTagging(const ChunkerOutputs<float> &out) { return TaggingOf(out); }
ChunkTagging ToTagging(const ChunkerOutputs<double> &out) { return TaggingOf(out); }

ChunkSequence DecodeChunks(const ChunkTagging &tagging, const ChunkInventory &inventory,
                           double threshold) {
  const int n = static_cast<int>(tagging.boundary.size());
  const std::size_t c = inventory.types.size();
  ChunkSequence cs;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && tagging.boundary[i] < threshold) continue;
    std::vector<double> sum(c, 0.0);
    for (int t = start; t < i; ++t) {
      for (std::size_t k = 0; k < c; ++k) sum[k] += tagging.types[t][k];
    }
    const auto best = std::max_element(sum.begin(), sum.end()) - sum.begin();
    cs.chunks.push_back({start, i - 1, inventory.types[best]});
    start = i;
  }
  return cs;
}

ChunkSequence Chunk(const ChunkerModel &model, const AnnotatedSentence &s) {
  auto out = ChunkerForward(model, model.params, s);
  ChunkSequence cs = DecodeChunks(ToTagging(out), model.inventory, model.config.boundary_threshold);
  cs.sentence_id = s.id;
  return cs;
}

std::vector<std::string> PosVocabulary(std::span<const ChunkedSentence> corpus) {
  std::set<std::string> tags;
  for (const auto &cs : corpus) {
    for (const auto &tok : cs.sentence.tokens) tags.insert(tok.pos);
  }
  return {tags.begin(), tags.end()};
}

ChunkerModel TrainChunker(std::span<const ChunkedSentence> corpus, const ChunkerConfig &config,
                          const ChunkInventory &inventory, const TrainConfig &train,
                          TrainHistory *history, const ChunkerEpochCallback &on_epoch) {
  if (corpus.empty()) throw InputError("empty chunker training corpus");
  ChunkerModel model(config, inventory, PosVocabulary(corpus));
  for (const auto &ex : corpus) {
    TypeTargets(ex.chunks, inventory);  // fail before training starts
    SentenceEmbeddings<float>(ex.sentence, config.hidden_dim);
  }
  model.params.Initialize(train.seed);
  auto loss = [&](std::size_t i) {
    auto out = ChunkerForward(model, model.params, corpus[i].sentence);
    return ChunkingLoss(out, corpus[i].chunks, model.inventory, model.config.alpha);
  };
  EpochCallback callback;
  if (on_epoch) callback = [&](int epoch, double l) { return on_epoch(epoch, l, model); };
  auto h = RunSgd(model.params, corpus.size(), loss, train, callback);
  if (history) *history = std::move(h);
  return model;
}

void SaveChunker(std::ostream &out, const ChunkerModel &model) {
  nlohmann::ordered_json config = {
      {"hidden_dim", model.config.hidden_dim},
      {"alpha", model.config.alpha},
      {"boundary_threshold", model.config.boundary_threshold},
      {"inventory", {{"name", model.inventory.name}, {"types", model.inventory.types}}},
      {"pos_vocab", model.pos_vocab},
  };
  autodiff::WriteCheckpoint(out, kChunkerKind, config, model.params);
}

ChunkerModel LoadChunker(std::istream &in, const std::string &source) {
  auto ckpt = autodiff::ReadCheckpoint(in, source);
  if (ckpt.kind != kChunkerKind) {
    throw FormatError(source, 0, "checkpoint holds a '" + ckpt.kind + "', not a chunker");
  }
  try {
    const auto &c = ckpt.config;
    ChunkerConfig config{c.at("hidden_dim").get<int>(), c.at("alpha").get<double>(),
                         c.at("boundary_threshold").get<double>()};
    ChunkInventory inventory{c.at("inventory").at("name").get<std::string>(),
                             c.at("inventory").at("types").get<std::vector<std::string>>()};
    ChunkerModel model(config, inventory, c.at("pos_vocab").get<std::vector<std::string>>());
    autodiff::RestoreParameters(ckpt.params, &model.params, source);
    return model;
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(source, 0, std::string("bad chunker config: ") + e.what());
  } catch (const std::logic_error &e) {
    throw FormatError(source, 0, std::string("bad chunker checkpoint: ") + e.what());
  }
}

template ChunkerOutputs<float> ChunkerForward(const ChunkerModel &, const ParameterSet<float> &,
                                              const AnnotatedSentence &);
template ChunkerOutputs<double> ChunkerForward(const ChunkerModel &,
                                               const ParameterSet<double> &,
                                               const AnnotatedSentence &);
template Tensor<float> ChunkingLoss(const ChunkerOutputs<float> &, const ChunkSequence &,
                                    const ChunkInventory &, double);
template Tensor<double> ChunkingLoss(const ChunkerOutputs<double> &, const ChunkSequence &,
                                     const ChunkInventory &, double);

}  // namespace sacoie

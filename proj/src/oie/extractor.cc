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

#include "sacoie/oie/extractor.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "sacoie/io/errors.h"
#include "sacoie/models/inputs.h"
#include "sacoie/tensor/checkpoint.h"

namespace sacoie {

using autodiff::Init;
using autodiff::ParameterSet;
using autodiff::Tensor;

namespace {

std::string LayerName(const char *base, int layer) { return base + std::to_string(layer); }

}  // namespace

OieModel::OieModel(OieConfig cfg, ChunkInventory inv, std::vector<std::string> labels)
    : config(cfg), inventory(std::move(inv)), dep_labels(std::move(labels)) {
  if (config.hidden_dim <= 0 || config.label_dim <= 0 || config.gcn_layers <= 0) {
    throw std::invalid_argument("extractor dimensions and layer count must be positive");
  }
  if (inventory.types.empty()) throw std::invalid_argument("empty chunk inventory");
  std::sort(dep_labels.begin(), dep_labels.end());
  dep_labels.erase(std::unique(dep_labels.begin(), dep_labels.end()), dep_labels.end());
  const std::size_t dh = config.hidden_dim, dl = config.label_dim;
  params.Add("W_verb", 2, dh, Init::kUniformFanIn, dh);
  params.Add("W_type", inventory.types.size(), dh, Init::kUniformFanIn, dh);
  params.Add("W_dep", dep_labels.size() + 1, dl, Init::kUniformFanIn, dl);
  for (int k = 0; k < config.gcn_layers; ++k) {
    params.Add(LayerName("W_l", k), dh, dl, Init::kUniformFanIn, dl);
    params.Add(LayerName("b", k), 1, dh);
  }
  params.Add("W_o", 2 * dh, kTagCount, Init::kUniformFanIn);
  params.Add("b_o", 1, kTagCount);
}

int OieModel::LabelIndex(std::string_view label) const {
  auto it = std::lower_bound(dep_labels.begin(), dep_labels.end(), label);
  return it != dep_labels.end() && *it == label
             ? static_cast<int>(it - dep_labels.begin()) + 1
             : 0;
}

template <typename Real>
Tensor<Real> EncodeChunks(const OieModel &model, const ParameterSet<Real> &params,
                          const AnnotatedSentence &s, const ChunkSequence &cs, int verb_index) {
  if (static_cast<std::size_t>(cs.token_count()) != s.size() || cs.chunks.empty()) {
    throw InputError("sentence '" + s.id + "': chunks cover " +
                     std::to_string(cs.token_count()) + " of " + std::to_string(s.size()) +
                     " tokens");
  }
  if (verb_index < 0 || static_cast<std::size_t>(verb_index) >= s.size()) {
    throw std::out_of_range("verb index " + std::to_string(verb_index) + " outside sentence '" +
                            s.id + "'");
  }
  std::vector<int> active(s.size(), 0);
  active[verb_index] = 1;
  Tensor<Real> tokens = Add(SentenceEmbeddings<Real>(s, model.config.hidden_dim),
                            GatherRows(params.Get("W_verb"), active));
  std::vector<Tensor<Real>> chunks;
  std::vector<int> types;
  for (const auto &c : cs.chunks) {
    chunks.push_back(MeanRows(tokens, c.start, c.end + 1));
    const int type = model.inventory.IndexOf(c.type);
    if (type < 0) {
      throw InputError("chunk type '" + c.type + "' not in inventory " + model.inventory.name);
    }
    types.push_back(type);
  }
  return Add(ConcatRows<Real>(chunks), GatherRows(params.Get("W_type"), types));
}

template <typename Real>
GcnOutput<Real> GcnForward(const OieModel &model, const ParameterSet<Real> &params,
                           const Tensor<Real> &chunk_encoding, const ChunkDepGraph &graph) {
  const std::size_t m = chunk_encoding.rows();
  if (static_cast<std::size_t>(graph.num_nodes) != m || graph.labels.size() != m) {
    throw std::invalid_argument("chunk graph has " + std::to_string(graph.num_nodes) +
                                " nodes for " + std::to_string(m) + " chunks");
  }
  std::vector<int> label_rows;
  for (const auto &l : graph.labels) label_rows.push_back(model.LabelIndex(l));
  const Tensor<Real> labels = GatherRows(params.Get("W_dep"), label_rows);

  GcnOutput<Real> out;
  Tensor<Real> h = chunk_encoding;
  for (int k = 0; k < model.config.gcn_layers; ++k) {
    Tensor<Real> msg = Concat(h, labels);
    Tensor<Real> alpha = MaskedSoftmax(MatMulTransB(msg, msg), graph.adjacency);
    Tensor<Real> values = Add(Add(h, MatMulTransB(labels, params.Get(LayerName("W_l", k)))),
                              params.Get(LayerName("b", k)));
    h = Relu(MatMul(alpha, values));
    out.alpha.push_back(alpha);
  }
  out.hidden = h;
  return out;
}

template <typename Real>
OieOutputs<Real> OieForward(const OieModel &model, const ParameterSet<Real> &params,
                            const AnnotatedSentence &s, const ChunkSequence &cs,
                            const ChunkDepGraph &graph, int verb_index) {
  OieOutputs<Real> out;
  out.chunk_encoding = EncodeChunks(model, params, s, cs, verb_index);
  out.gcn = GcnForward(model, params, out.chunk_encoding, graph);
  out.chunk_probs = Softmax(Add(MatMul(Concat(out.chunk_encoding, out.gcn.hidden),
                                       params.Get("W_o")),
                                params.Get("b_o")));
  return out;
}

template <typename Real>
Tensor<Real> ProjectToTokens(const Tensor<Real> &chunk_probs, const ChunkSequence &cs) {
  if (chunk_probs.rows() != cs.size()) {
    throw std::invalid_argument("chunk distribution rows do not match the chunk count");
  }
  return GatherRows(chunk_probs, ChunkIndexTable(cs));
}

template <typename Real>
Tensor<Real> OieLoss(const Tensor<Real> &token_probs, std::span<const int> gold_token_tags) {
  if (gold_token_tags.size() != token_probs.rows()) {
    throw std::invalid_argument("gold tags for " + std::to_string(gold_token_tags.size()) +
                                " tokens, predictions for " +
                                std::to_string(token_probs.rows()));
  }
  return CrossEntropy(token_probs, gold_token_tags);
}

namespace {

template <typename Real>
std::vector<std::vector<double>> RowsOf(const Tensor<Real> &t) {
  std::vector<std::vector<double>> out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    auto row = t.values().subspan(r * t.cols(), t.cols());
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> Rows(const Tensor<float> &t) { return RowsOf(t); }
std::vector<std::vector<double>> Rows(const Tensor<double> &t) { return RowsOf(t); }

std::vector<ExtractedTuple> ExtractSentence(const OieModel &model, const AnnotatedSentence &s,
                                            const ChunkSequence &cs,
                                            const ChunkDepGraph &graph) {
  std::vector<ExtractedTuple> out;
  for (const auto &tok : s.tokens) {
    if (!tok.is_verb) continue;
    auto fwd = OieForward(model, model.params, s, cs, graph, tok.index);
    for (auto &t : DecodeTuples(Rows(fwd.chunk_probs), cs, tok.index)) out.push_back(std::move(t));
  }
  return out;
}

namespace {

int IndicatorOf(const TupleEntry &entry, const AnnotatedSentence &s) {
  if (entry.verb) return *entry.verb;
  for (int t : entry.tuple.relation) {
    if (s.tokens[t].is_verb) return t;
  }
  return entry.tuple.relation.empty() ? -1 : entry.tuple.relation.front();
}

}  // namespace

std::vector<OieExample> BuildOieExamples(std::span<const TupleRecord> records,
                                         std::span<const ChunkSequence> chunks,
                                         OieExampleStats *stats) {
  if (records.size() != chunks.size()) {
    throw InputError("tuple corpus has " + std::to_string(records.size()) +
                     " sentences, chunk corpus " + std::to_string(chunks.size()));
  }
  OieExampleStats local;
  std::vector<OieExample> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto &s = records[i].sentence;
    ChunkSequence cs = chunks[i];
    if (cs.sentence_id != s.id) {
      throw InputError("sentence " + std::to_string(i) + ": chunk id '" + cs.sentence_id +
                       "' does not match tuple id '" + s.id + "'");
    }
    if (auto problems = ValidateChunkSequence(cs, static_cast<int>(s.size())); !problems.empty()) {
      throw InputError("sentence '" + s.id + "': " + problems.front());
    }
    const ChunkDepGraph graph = ToChunkGraph(s, cs);
    std::map<int, std::vector<int>> by_verb;
    for (const auto &entry : records[i].tuples) {
      const int verb = IndicatorOf(entry, s);
      if (verb < 0 || static_cast<std::size_t>(verb) >= s.size()) {
        throw InputError("sentence '" + s.id + "': relation indicator outside the sentence");
      }
      auto tags = GoldChunkTags(cs, entry.tuple, &local.tags);
      if (!by_verb.emplace(verb, std::move(tags)).second) ++local.duplicate_verbs;
    }
    for (const auto &tok : s.tokens) {
      if (tok.is_verb && by_verb.emplace(tok.index, std::vector<int>(cs.size(), kOutsideTag)).second) {
        ++local.negative;
      }
    }
    for (auto &[verb, tags] : by_verb) {
      OieExample ex{s, cs, graph, verb, tags, ProjectTags(tags, cs)};
      out.push_back(std::move(ex));
    }
  }
  if (stats) *stats = local;
  return out;
}

std::vector<std::string> DepLabelVocabulary(std::span<const OieExample> examples) {
  std::set<std::string> labels;
  for (const auto &ex : examples) labels.insert(ex.graph.labels.begin(), ex.graph.labels.end());
  return {labels.begin(), labels.end()};
}

OieModel TrainOie(std::span<const OieExample> examples, const OieConfig &config,
                  const ChunkInventory &inventory, const TrainConfig &train,
                  TrainHistory *history, const OieEpochCallback &on_epoch) {
  if (examples.empty()) throw InputError("empty extractor training corpus");
  OieModel model(config, inventory, DepLabelVocabulary(examples));
  model.params.Initialize(train.seed);
  auto loss = [&](std::size_t i) {
    const auto &ex = examples[i];
    auto out = OieForward(model, model.params, ex.sentence, ex.chunks, ex.graph, ex.verb);
    return OieLoss(ProjectToTokens(out.chunk_probs, ex.chunks), ex.token_tags);
  };
  loss(0);  // surface input errors before the first update
  EpochCallback callback;
  if (on_epoch) callback = [&](int epoch, double l) { return on_epoch(epoch, l, model); };
  auto h = RunSgd(model.params, examples.size(), loss, train, callback);
  if (history) *history = std::move(h);
  return model;
}

double TokenTagAccuracy(const OieModel &model, std::span<const OieExample> examples) {
  long correct = 0, total = 0;
  for (const auto &ex : examples) {
    auto out = OieForward(model, model.params, ex.sentence, ex.chunks, ex.graph, ex.verb);
    auto rows = Rows(out.chunk_probs);
    for (std::size_t c = 0; c < ex.chunks.size(); ++c) {
      const int tag = ArgMax(rows[c]);
      for (int t = ex.chunks.chunks[c].start; t <= ex.chunks.chunks[c].end; ++t) {
        correct += tag == ex.token_tags[t];
        ++total;
      }
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / total;
}

void SaveExtractor(std::ostream &out, const OieModel &model) {
  nlohmann::ordered_json config = {
      {"hidden_dim", model.config.hidden_dim},
      {"label_dim", model.config.label_dim},
      {"gcn_layers", model.config.gcn_layers},
      {"inventory", {{"name", model.inventory.name}, {"types", model.inventory.types}}},
      {"dep_labels", model.dep_labels},
      {"tags", TagNames()},
  };
  autodiff::WriteCheckpoint(out, kExtractorKind, config, model.params);
}

OieModel LoadExtractor(std::istream &in, const std::string &source) {
  auto ckpt = autodiff::ReadCheckpoint(in, source);
  if (ckpt.kind != kExtractorKind) {
    throw FormatError(source, 0, "checkpoint holds a '" + ckpt.kind + "', not an extractor");
  }
  try {
    const auto &c = ckpt.config;
    if (c.at("tags").get<std::vector<std::string>>() != TagNames()) {
      throw FormatError(source, 0, "checkpoint uses a different tag inventory");
    }
    OieConfig config{c.at("hidden_dim").get<int>(), c.at("label_dim").get<int>(),
                     c.at("gcn_layers").get<int>()};
    ChunkInventory inventory{c.at("inventory").at("name").get<std::string>(),
                             c.at("inventory").at("types").get<std::vector<std::string>>()};
    OieModel model(config, inventory, c.at("dep_labels").get<std::vector<std::string>>());
    autodiff::RestoreParameters(ckpt.params, &model.params, source);
    return model;
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(source, 0, std::string("bad extractor config: ") + e.what());
  } catch (const std::logic_error &e) {
    throw FormatError(source, 0, std::string("bad extractor checkpoint: ") + e.what());
  }
}

#define SACOIE_INSTANTIATE_OIE(Real)                                                    \
  template Tensor<Real> EncodeChunks(const OieModel &, const ParameterSet<Real> &,      \
                                     const AnnotatedSentence &, const ChunkSequence &,  \
                                     int);                                              \
  template GcnOutput<Real> GcnForward(const OieModel &, const ParameterSet<Real> &,     \
                                      const Tensor<Real> &, const ChunkDepGraph &);     \
  template OieOutputs<Real> OieForward(const OieModel &, const ParameterSet<Real> &,    \
                                       const AnnotatedSentence &, const ChunkSequence &,\
                                       const ChunkDepGraph &, int);                     \
  template Tensor<Real> ProjectToTokens(const Tensor<Real> &, const ChunkSequence &);   \
  template Tensor<Real> OieLoss(const Tensor<Real> &, std::span<const int>);

SACOIE_INSTANTIATE_OIE(float)
SACOIE_INSTANTIATE_OIE(double)

#undef SACOIE_INSTANTIATE_OIE

}  // namespace sacoie

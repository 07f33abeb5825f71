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

#include "sacoie/chunker/chunk_metrics.h"

#include <cmath>
#include <set>
#include <tuple>

#include "sacoie/io/errors.h"

namespace sacoie {

double PrfCounts::Precision() const {
  return predicted == 0 ? 0.0 : static_cast<double>(correct) / predicted;
}

double PrfCounts::Recall() const {
  return gold == 0 ? 0.0 : static_cast<double>(correct) / gold;
}

double PrfCounts::F1() const {
  const double p = Precision(), r = Recall();
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

void PrfCounts::Merge(const PrfCounts &o) {
  predicted += o.predicted;
  gold += o.gold;
  correct += o.correct;
}

void ChunkMetrics::Merge(const ChunkMetrics &o) {
  boundary.Merge(o.boundary);
  typed.Merge(o.typed);
  for (const auto &[k, v] : o.boundary_by_length) boundary_by_length[k].Merge(v);
  for (const auto &[k, v] : o.typed_by_type) typed_by_type[k].Merge(v);
}

void AccumulateChunkMetrics(const ChunkSequence &predicted, const ChunkSequence &gold,
                            ChunkMetrics *m) {
  if (predicted.token_count() != gold.token_count()) {
    throw InputError("sentence '" + gold.sentence_id + "': predicted chunks cover " +
                     std::to_string(predicted.token_count()) + " tokens, gold " +
                     std::to_string(gold.token_count()));
  }
  std::set<std::tuple<int, int>> gold_spans;
  std::set<std::tuple<int, int, std::string>> gold_typed;
  for (const auto &c : gold.chunks) {
    gold_spans.insert({c.start, c.end});
    gold_typed.insert({c.start, c.end, c.type});
    ++m->boundary.gold;
    ++m->typed.gold;
    ++m->boundary_by_length[LengthBucket(c.length())].gold;
    ++m->typed_by_type[c.type].gold;
  }
  for (const auto &c : predicted.chunks) {
    auto &len = m->boundary_by_length[LengthBucket(c.length())];
    auto &type = m->typed_by_type[c.type];
    ++m->boundary.predicted;
    ++m->typed.predicted;
    ++len.predicted;
    ++type.predicted;
    if (gold_spans.contains({c.start, c.end})) {
      ++m->boundary.correct;
      ++len.correct;
      if (gold_typed.contains({c.start, c.end, c.type})) {
        ++m->typed.correct;
        ++type.correct;
      }
    }
  }
}

ChunkMetrics EvaluateChunks(std::span<const ChunkSequence> predicted,
                            std::span<const ChunkSequence> gold) {
  if (gold.empty()) throw InputError("empty evaluation corpus");
  if (predicted.size() != gold.size()) {
    throw InputError("predicted corpus has " + std::to_string(predicted.size()) +
                     " sentences, gold " + std::to_string(gold.size()));
  }
  ChunkMetrics m;
  for (std::size_t i = 0; i < gold.size(); ++i) AccumulateChunkMetrics(predicted[i], gold[i], &m);
  return m;
}

ChunkMetrics EvaluateChunker(const ChunkerModel &model, std::span<const ChunkedSentence> corpus) {
  std::vector<ChunkSequence> pred, gold;
  for (const auto &ex : corpus) {
    pred.push_back(Chunk(model, ex.sentence));
    gold.push_back(ex.chunks);
  }
  return EvaluateChunks(pred, gold);
}

namespace {

double Pct(double v) { return std::round(v * 10000.0) / 100.0; }

nlohmann::ordered_json PrfJson(const PrfCounts &c) {
  return {{"precision", Pct(c.Precision())}, {"recall", Pct(c.Recall())}, {"f1", Pct(c.F1())},
          {"predicted", c.predicted}, {"gold", c.gold}, {"correct", c.correct}};
}

}  // namespace

nlohmann::ordered_json ChunkMetricsToJson(const ChunkMetrics &m) {
  nlohmann::ordered_json out;
  out["boundary"] = PrfJson(m.boundary);
  out["typed"] = PrfJson(m.typed);
  auto &len = out["boundary_by_length"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : m.boundary_by_length) {
    len[k == kMaxLengthBucket ? std::to_string(k) + "+" : std::to_string(k)] = PrfJson(v);
  }
  auto &type = out["typed_by_type"] = nlohmann::ordered_json::object();
  for (const auto &[k, v] : m.typed_by_type) type[k] = PrfJson(v);
  return out;
}

}  // namespace sacoie

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

// Chunking accuracy by exact span match, with breakdowns by chunk length
// and chunk type.

#ifndef SACOIE_CHUNKER_CHUNK_METRICS_H_
#define SACOIE_CHUNKER_CHUNK_METRICS_H_

#include <map>
#include <span>
#include <string>

#include <json.hpp>

#include "sacoie/chunker/chunker.h"
#include "sacoie/core/types.h"

namespace sacoie {

struct PrfCounts {
  long predicted = 0;
  long gold = 0;
  long correct = 0;

  // 0 when the denominator is 0.
  double Precision() const;
  double Recall() const;
  double F1() const;
  void Merge(const PrfCounts &o);
  bool operator==(const PrfCounts &) const = default;
};

inline constexpr int kMaxLengthBucket = 5;

// Length bucket of a chunk: 1..4, or 5 for "5 and longer".
inline int LengthBucket(int length) { return length < kMaxLengthBucket ? length : kMaxLengthBucket; }

struct ChunkMetrics {
  // A predicted chunk is boundary-correct iff a gold chunk has the same
  // start and end, and type-correct iff that gold chunk also has its type.
  PrfCounts boundary;
  PrfCounts typed;
  // Boundary counts per length bucket (predicted side by predicted length,
  // gold side by gold length).
  std::map<int, PrfCounts> boundary_by_length;
  // Type counts per chunk type.
  std::map<std::string, PrfCounts> typed_by_type;

  void Merge(const ChunkMetrics &o);
  bool operator==(const ChunkMetrics &) const = default;
};

// Adds one sentence. Both sequences must cover the same tokens.
void AccumulateChunkMetrics(const ChunkSequence &predicted, const ChunkSequence &gold,
                            ChunkMetrics *metrics);

// Sentence lists are matched by position. Throws InputError on a length
// mismatch or an empty corpus.
ChunkMetrics EvaluateChunks(std::span<const ChunkSequence> predicted,
                            std::span<const ChunkSequence> gold);

ChunkMetrics EvaluateChunker(const ChunkerModel &model, std::span<const ChunkedSentence> corpus);

// Scores as percentages rounded to 2 decimals.
nlohmann::ordered_json ChunkMetricsToJson(const ChunkMetrics &metrics);

}  // namespace sacoie

#endif  // SACOIE_CHUNKER_CHUNK_METRICS_H_

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

// Boundary alignment between chunk sequences and gold tuple spans.
//
// Recall side: every gold span (relation or argument) is classified against
// the chunking. Precision side: every chunk is classified against the gold
// spans of its sentence.

#ifndef SACOIE_ALIGN_SPAN_ALIGNMENT_H_
#define SACOIE_ALIGN_SPAN_ALIGNMENT_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie {

enum class MatchCase {
  kMatchExact = 0,
  kMatchConcatenation,
  kMismatchOverlap,
  kMismatchNoOverlap,
};

inline constexpr int kMatchCaseCount = 4;

std::string_view MatchCaseName(MatchCase c);

// MatchExact iff the span equals one chunk, MatchConcatenation iff it equals
// the union of two or more consecutive chunks, MismatchOverlap otherwise.
// Throws std::out_of_range for spans outside the sentence.
MatchCase ClassifyGoldSpan(TokenRange span, const ChunkSequence &cs);

// MatchExact iff the chunk equals a gold span; MatchConcatenation iff it is
// strictly inside a gold span whose boundaries fall on chunk boundaries of
// `cs`; MismatchNoOverlap otherwise (including partial overlaps, see
// OverlapsAnyGoldSpan).
MatchCase ClassifyChunk(const Chunk &chunk, std::span<const TokenRange> gold,
                        const ChunkSequence &cs);

bool OverlapsAnyGoldSpan(const Chunk &chunk, std::span<const TokenRange> gold);

// Covering token range of each relation and argument, in tuple order.
std::vector<TokenRange> GoldSpans(std::span<const GoldTuple> tuples);

enum class AlignmentSide { kPrecision, kRecall };

struct CaseStats {
  std::int64_t count = 0;
  std::int64_t length_sum = 0;

  double MeanLength() const {
    return count == 0 ? 0.0 : static_cast<double>(length_sum) / count;
  }

  bool operator==(const CaseStats &) const = default;
};

struct AlignmentReport {
  AlignmentSide side = AlignmentSide::kPrecision;
  std::array<CaseStats, kMatchCaseCount> cases{};
  // Precision side only: mismatch chunks that partially overlap a gold span.
  // They are reported inside MismatchNoOverlap; this counts them separately.
  std::int64_t partial_overlap = 0;

  const CaseStats &at(MatchCase c) const { return cases[static_cast<int>(c)]; }
  void Add(MatchCase c, int length);
  void Merge(const AlignmentReport &other);

  std::int64_t total() const;
  // Percentages in [0, 100].
  double Percent(MatchCase c) const;
  double MatchPercent() const;
  double MatchMeanLength() const;

  bool operator==(const AlignmentReport &) const = default;
};

struct AlignmentResult {
  AlignmentReport precision{AlignmentSide::kPrecision};
  AlignmentReport recall{AlignmentSide::kRecall};

  double P() const { return precision.MatchPercent(); }
  double R() const { return recall.MatchPercent(); }
  double F1() const;

  void Merge(const AlignmentResult &other);
  bool operator==(const AlignmentResult &) const = default;
};

// Harmonic mean; 0 when both are 0.
double F1Score(double precision, double recall);

struct AlignmentInput {
  ChunkSequence chunks;
  std::vector<GoldTuple> gold;
};

// Classifies one sentence into `result`.
void AccumulateAlignment(const AlignmentInput &sentence, AlignmentResult *result);

// Whole-corpus analysis; sentences are processed in parallel and merged.
// Throws InputError for an empty corpus.
AlignmentResult AggregateAlignment(std::span<const AlignmentInput> corpus);

// Single-threaded reference for AggregateAlignment.
AlignmentResult AggregateAlignmentSerial(std::span<const AlignmentInput> corpus);

struct SpanStats {
  std::int64_t count = 0;
  double mean_length = 0.0;
};

SpanStats SpanStatistics(std::span<const TokenRange> spans);

// Contiguous ranges of at most `max_len` tokens in which every token's head
// or one of its dependents lies inside the range. A one-token range is kept
// only for the sentence root.
std::vector<TokenRange> EnumerateSpanOieSpans(const AnnotatedSentence &s,
                                              int max_len = 10);

// Rendering rounds to one decimal.
std::string RenderAlignmentTable(const AlignmentResult &result);
std::string AlignmentToJson(const AlignmentResult &result);

}  // namespace sacoie

#endif  // SACOIE_ALIGN_SPAN_ALIGNMENT_H_

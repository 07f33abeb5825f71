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

// Chunk-level BIO tags for tuple extraction: the tag inventory, gold tag
// derivation from token-level tuples, and decoding tags back into tuples.

#ifndef SACOIE_OIE_TAGS_H_
#define SACOIE_OIE_TAGS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie {

// Tag 0 is O; then B-/I- pairs for REL, ARG0 .. ARG5.
inline constexpr int kOutsideTag = 0;
inline constexpr int kTagCount = 1 + 2 * kRoleCount;

inline int BeginTag(Role role) { return 1 + 2 * static_cast<int>(role); }
inline int InsideTag(Role role) { return 2 + 2 * static_cast<int>(role); }
inline bool IsBeginTag(int tag) { return tag != kOutsideTag && tag % 2 == 1; }
// Role of a B-/I- tag; tag must not be O.
inline Role TagRole(int tag) { return static_cast<Role>((tag - 1) / 2); }

std::string TagName(int tag);
// -1 for unknown names.
int ParseTag(std::string_view name);
// All tag names in index order.
std::vector<std::string> TagNames();

struct GoldTagStats {
  int spans = 0;
  // Gold spans not aligned to chunk boundaries, widened to the smallest
  // covering chunk span.
  int expanded = 0;
  // Chunks claimed by two slots; the earlier slot keeps them.
  int conflicts = 0;

  void Merge(const GoldTagStats &o) {
    spans += o.spans;
    expanded += o.expanded;
    conflicts += o.conflicts;
  }
};

// Chunk-level tags of one tuple: each slot's covering token range is mapped
// to the chunks it touches, first chunk B-, the rest I-. Throws InputError
// for tuples with more than kMaxArgumentRole + 1 arguments or tokens
// outside the chunk sequence.
std::vector<int> GoldChunkTags(const ChunkSequence &cs, const GoldTuple &tuple,
                               GoldTagStats *stats = nullptr);

// Tags of the chunk containing each token.
std::vector<int> ProjectTags(std::span<const int> chunk_tags, const ChunkSequence &cs);

// Index of the largest entry, lowest index on ties.
int ArgMax(std::span<const double> row);

// Turns per-chunk tag distributions into at most one tuple for the verb at
// token `verb_index`. Contiguous B-/I- runs form spans (an I- tag that does
// not continue a run of its role opens one); the REL span is the run
// containing the verb's chunk, else the first REL run; each argument role
// takes its first run. A tuple is emitted when a REL span and at least one
// argument exist. Confidence is the geometric mean of the winning tag
// probabilities over all chunks not tagged O.
std::vector<ExtractedTuple> DecodeTuples(std::span<const std::vector<double>> chunk_probs,
                                         const ChunkSequence &cs, int verb_index);

}  // namespace sacoie

#endif  // SACOIE_OIE_TAGS_H_

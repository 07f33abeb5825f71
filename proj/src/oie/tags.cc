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

#include "sacoie/oie/tags.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "sacoie/io/errors.h"

namespace sacoie {

std::string TagName(int tag) {
  if (tag == kOutsideTag) return "O";
  return std::string(IsBeginTag(tag) ? "B-" : "I-") + std::string(RoleName(TagRole(tag)));
}

int ParseTag(std::string_view name) {
  for (int t = 0; t < kTagCount; ++t) {
    if (TagName(t) == name) return t;
  }
  return -1;
}

std::vector<std::string> TagNames() {
  std::vector<std::string> out;
  for (int t = 0; t < kTagCount; ++t) out.push_back(TagName(t));
  return out;
}

std::vector<int> GoldChunkTags(const ChunkSequence &cs, const GoldTuple &tuple,
                               GoldTagStats *stats) {
  if (tuple.arguments.size() > static_cast<std::size_t>(kMaxArgumentRole) + 1) {
    throw InputError("sentence '" + cs.sentence_id + "': tuple has " +
                     std::to_string(tuple.arguments.size()) + " arguments, at most " +
                     std::to_string(kMaxArgumentRole + 1) + " supported");
  }
  GoldTagStats local;
  std::vector<int> tags(cs.size(), kOutsideTag);
  auto assign = [&](const std::vector<int> &tokens, Role role) {
    if (tokens.empty()) return;
    const int first = tokens.front(), last = tokens.back();
    if (first < 0 || last >= cs.token_count()) {
      throw InputError("sentence '" + cs.sentence_id + "': tuple token outside the sentence");
    }
    const int c0 = ChunkOfToken(cs, first), c1 = ChunkOfToken(cs, last);
    ++local.spans;
    if (cs.chunks[c0].start != first || cs.chunks[c1].end != last) ++local.expanded;
    for (int c = c0; c <= c1; ++c) {
      if (tags[c] != kOutsideTag) {
        ++local.conflicts;
        continue;
      }
      tags[c] = c == c0 ? BeginTag(role) : InsideTag(role);
    }
  };
  assign(tuple.relation, Role::kRel);
  for (std::size_t k = 0; k < tuple.arguments.size(); ++k) {
    assign(tuple.arguments[k], ArgRole(static_cast<int>(k)));
  }
  if (stats) stats->Merge(local);
  return tags;
}

std::vector<int> ProjectTags(std::span<const int> chunk_tags, const ChunkSequence &cs) {
  std::vector<int> out;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    out.insert(out.end(), cs.chunks[c].length(), chunk_tags[c]);
  }
  return out;
}

int ArgMax(std::span<const double> row) {
  return static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
}

std::vector<ExtractedTuple> DecodeTuples(std::span<const std::vector<double>> chunk_probs,
                                         const ChunkSequence &cs, int verb_index) {
  struct Run {
    Role role;
    int start, end;
  };
  std::vector<Run> runs;
  double log_sum = 0.0;
  int tagged = 0;
  for (std::size_t c = 0; c < chunk_probs.size(); ++c) {
    const int tag = ArgMax(chunk_probs[c]);
    if (tag == kOutsideTag) continue;
    log_sum += std::log(chunk_probs[c][tag]);
    ++tagged;
    const Role role = TagRole(tag);
    const int ci = static_cast<int>(c);
    if (!IsBeginTag(tag) && !runs.empty() && runs.back().role == role &&
        runs.back().end == ci - 1) {
      runs.back().end = ci;
    } else {
      runs.push_back({role, ci, ci});
    }
  }

  const int verb_chunk =
      verb_index >= 0 && verb_index < cs.token_count() ? ChunkOfToken(cs, verb_index) : -1;
  std::optional<Run> rel;
  std::map<int, Run> args;
  for (const auto &r : runs) {
    if (r.role == Role::kRel) {
      if (!rel || (!(rel->start <= verb_chunk && verb_chunk <= rel->end) &&
                   r.start <= verb_chunk && verb_chunk <= r.end)) {
        rel = r;
      }
    } else {
      args.try_emplace(static_cast<int>(r.role), r);
    }
  }
  if (!rel || args.empty()) return {};

  auto span = [&](const Run &r) {
    TokenRange chunks{r.start, r.end};
    return TupleSpan{r.role, chunks, ChunkSpanToTokens(cs, chunks)};
  };
  ExtractedTuple t;
  t.relation = span(*rel);
  for (const auto &[role, r] : args) t.arguments.push_back(span(r));
  t.confidence = std::exp(log_sum / tagged);
  t.verb_index = verb_index;
  return {t};
}

}  // namespace sacoie

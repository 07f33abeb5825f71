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

#include "sacoie/core/types.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sacoie {

const DependencyArc *AnnotatedSentence::ArcOf(int token) const {
  for (const auto &arc : arcs) {
    if (arc.dependent == token) return &arc;
  }
  return nullptr;
}

int ChunkInventory::IndexOf(std::string_view type) const {
  auto it = std::find(types.begin(), types.end(), type);
  return it == types.end() ? -1 : static_cast<int>(it - types.begin());
}

ChunkInventory ChunkInventory::Conll2000() {
  return {"conll2000",
          {"NP", "VP", "PP", "ADVP", "SBAR", "ADJP", "PRT", "CONJP", "INTJ",
           "LST", "UCP", "O"}};
}

ChunkInventory ChunkInventory::OiaSimplePhrase() {
  return {"oia-sp",
          {"Noun", "Verbal", "Prepositional", "Logical", "Modifier",
           "Function", "O"}};
}

namespace {

constexpr std::array<std::string_view, kRoleCount> kRoleNames = {
    "REL", "ARG0", "ARG1", "ARG2", "ARG3", "ARG4", "ARG5"};

}  // namespace

std::string_view RoleName(Role role) {
  return kRoleNames[static_cast<int>(role)];
}

std::optional<Role> ParseRole(std::string_view name) {
  for (int i = 0; i < kRoleCount; ++i) {
    if (kRoleNames[i] == name) return static_cast<Role>(i);
  }
  return std::nullopt;
}

namespace {

std::vector<int> RangeTokens(const TokenRange &r) {
  std::vector<int> out;
  for (int t = r.start; t <= r.end; ++t) out.push_back(t);
  return out;
}

}  // namespace

GoldTuple ToTokenTuple(const ExtractedTuple &tuple) {
  GoldTuple out;
  out.relation = RangeTokens(tuple.relation.token_span);
  for (const auto &arg : tuple.arguments) {
    out.arguments.push_back(RangeTokens(arg.token_span));
  }
  return out;
}

std::vector<std::string> ValidateSentence(const AnnotatedSentence &s) {
  std::vector<std::string> out;
  const int n = static_cast<int>(s.tokens.size());
  for (int i = 0; i < n; ++i) {
    if (s.tokens[i].index != i) {
      out.emplace_back("token index not contiguous");
      break;
    }
  }
  for (const auto &tok : s.tokens) {
    if (tok.surface.empty()) {
      out.emplace_back("empty token surface");
      break;
    }
  }

  std::vector<int> arc_count(n, 0);
  bool dep_range = false, head_range = false, self_loop = false;
  for (const auto &arc : s.arcs) {
    if (arc.dependent < 0 || arc.dependent >= n) {
      dep_range = true;
      continue;
    }
    if (arc.head != kRootHead && (arc.head < 0 || arc.head >= n)) {
      head_range = true;
    }
    if (arc.head == arc.dependent) self_loop = true;
    ++arc_count[arc.dependent];
  }
  if (dep_range) out.emplace_back("arc dependent out of range");
  if (head_range) out.emplace_back("arc head out of range");
  if (self_loop) out.emplace_back("arc head equals dependent");
  if (!s.arcs.empty()) {
    if (std::any_of(arc_count.begin(), arc_count.end(),
                    [](int c) { return c > 1; })) {
      out.emplace_back("token has multiple arcs");
    }
    if (!dep_range && std::any_of(arc_count.begin(), arc_count.end(),
                                  [](int c) { return c == 0; })) {
      out.emplace_back("token has no arc");
    }
  }

  if (s.embeddings && s.embeddings->rows != s.tokens.size()) {
    out.emplace_back("embedding row mismatch");
  }
  return out;
}

std::vector<std::string> ValidateChunkSequence(const ChunkSequence &cs,
                                               int token_count,
                                               const ChunkInventory *inventory) {
  std::vector<std::string> out;
  int expected_start = 0;
  for (const auto &c : cs.chunks) {
    if (c.start > c.end) {
      out.emplace_back("chunk start after end");
      return out;
    }
    if (c.start != expected_start) {
      out.emplace_back(c.start < expected_start ? "chunks overlap"
                                                : "chunks leave a gap");
      return out;
    }
    if (inventory != nullptr && !inventory->Contains(c.type)) {
      out.emplace_back("chunk type not in inventory: " + c.type);
    }
    expected_start = c.end + 1;
  }
  if (expected_start != token_count) {
    out.emplace_back("chunks do not cover the sentence");
  }
  return out;
}

int ChunkOfToken(const ChunkSequence &cs, int t) {
  if (t < 0 || t >= cs.token_count()) {
    throw std::out_of_range("token " + std::to_string(t) +
                            " outside chunk sequence");
  }
  // Chunks are sorted by start; find the last chunk starting at or before t.
  auto it = std::upper_bound(
      cs.chunks.begin(), cs.chunks.end(), t,
      [](int tok, const Chunk &c) { return tok < c.start; });
  return static_cast<int>(it - cs.chunks.begin()) - 1;
}

std::vector<int> ChunkIndexTable(const ChunkSequence &cs) {
  std::vector<int> table(cs.token_count(), -1);
  for (std::size_t i = 0; i < cs.chunks.size(); ++i) {
    for (int t = cs.chunks[i].start; t <= cs.chunks[i].end; ++t) {
      table[t] = static_cast<int>(i);
    }
  }
  return table;
}

TokenRange ChunkSpanToTokens(const ChunkSequence &cs, TokenRange chunk_span) {
  return {cs.chunks.at(chunk_span.start).start, cs.chunks.at(chunk_span.end).end};
}

bool IsVerbTag(std::string_view pos) {
  return pos == "VERB" || (pos.size() >= 2 && pos.substr(0, 2) == "VB");
}

}  // namespace sacoie

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

// Domain types shared by every module: annotated sentences, chunk sequences
// and tuples.

#ifndef SACOIE_CORE_TYPES_H_
#define SACOIE_CORE_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sacoie {

// Head index used for the artificial ROOT in memory. CoNLL-U files encode
// it as 0 with 1-based token ids.
inline constexpr int kRootHead = -1;

// Highest argument role (ARG0..ARG5).
inline constexpr int kMaxArgumentRole = 5;

struct Token {
  int index = 0;
  std::string surface;
  std::string pos;
  bool is_verb = false;

  bool operator==(const Token &) const = default;
};

struct DependencyArc {
  int head = kRootHead;
  int dependent = 0;
  std::string label;

  bool operator==(const DependencyArc &) const = default;
};

// Row-major dense matrix of 32-bit reals.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  float &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool operator==(const DenseMatrix &) const = default;
};

struct AnnotatedSentence {
  std::string id;
  std::vector<Token> tokens;
  std::vector<DependencyArc> arcs;
  std::optional<DenseMatrix> embeddings;

  std::size_t size() const { return tokens.size(); }

  // Arc whose dependent is `token`, or nullptr.
  const DependencyArc *ArcOf(int token) const;

  bool operator==(const AnnotatedSentence &) const = default;
};

// Inclusive token range [start, end].
struct TokenRange {
  int start = 0;
  int end = 0;

  int length() const { return end - start + 1; }
  bool Contains(int t) const { return start <= t && t <= end; }
  bool Contains(const TokenRange &o) const {
    return start <= o.start && o.end <= end;
  }
  bool Overlaps(const TokenRange &o) const {
    return start <= o.end && o.start <= end;
  }

  auto operator<=>(const TokenRange &) const = default;
};

struct Chunk {
  int start = 0;
  int end = 0;
  std::string type;

  int length() const { return end - start + 1; }
  TokenRange range() const { return {start, end}; }

  bool operator==(const Chunk &) const = default;
};

// A sentence as an ordered, non-overlapping, exhaustive chunk sequence.
struct ChunkSequence {
  std::string sentence_id;
  std::vector<Chunk> chunks;

  std::size_t size() const { return chunks.size(); }
  // Number of tokens covered (end of last chunk + 1).
  int token_count() const { return chunks.empty() ? 0 : chunks.back().end + 1; }

  bool operator==(const ChunkSequence &) const = default;
};

// Chunk type inventories.
struct ChunkInventory {
  std::string name;
  std::vector<std::string> types;

  // Index of `type`, or -1.
  int IndexOf(std::string_view type) const;
  bool Contains(std::string_view type) const { return IndexOf(type) >= 0; }

  static ChunkInventory Conll2000();
  static ChunkInventory OiaSimplePhrase();
};

enum class Role { kRel = 0, kArg0, kArg1, kArg2, kArg3, kArg4, kArg5 };

inline constexpr int kRoleCount = 2 + kMaxArgumentRole;

std::string_view RoleName(Role role);
std::optional<Role> ParseRole(std::string_view name);
inline Role ArgRole(int n) { return static_cast<Role>(1 + n); }

struct TupleSpan {
  Role role = Role::kRel;
  TokenRange chunk_span;
  TokenRange token_span;

  bool operator==(const TupleSpan &) const = default;
};

struct ExtractedTuple {
  TupleSpan relation;
  std::vector<TupleSpan> arguments;
  double confidence = 0.0;
  int verb_index = 0;

  bool operator==(const ExtractedTuple &) const = default;
};

// Token sets of a reference tuple. Each set is sorted ascending.
struct GoldTuple {
  std::vector<int> relation;
  std::vector<std::vector<int>> arguments;

  bool operator==(const GoldTuple &) const = default;
  auto operator<=>(const GoldTuple &) const = default;
};

// Flattens an extracted tuple to token sets.
GoldTuple ToTokenTuple(const ExtractedTuple &tuple);

// Violations of the sentence invariants; empty when well-formed.
std::vector<std::string> ValidateSentence(const AnnotatedSentence &s);

// Violations of the chunk-sequence invariants for a sentence of
// `token_count` tokens. Type membership is checked when `inventory` is set.
std::vector<std::string> ValidateChunkSequence(
    const ChunkSequence &cs, int token_count,
    const ChunkInventory *inventory = nullptr);

// Index of the chunk containing token `t`; throws std::out_of_range.
int ChunkOfToken(const ChunkSequence &cs, int t);

// Token -> chunk index table for the whole sequence.
std::vector<int> ChunkIndexTable(const ChunkSequence &cs);

// Token range covered by chunks [first, last].
TokenRange ChunkSpanToTokens(const ChunkSequence &cs, TokenRange chunk_span);

// True for Penn ("VB*") and universal ("VERB") verb tags.
bool IsVerbTag(std::string_view pos);

}  // namespace sacoie

#endif  // SACOIE_CORE_TYPES_H_

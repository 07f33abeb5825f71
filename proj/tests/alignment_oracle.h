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

// Brute-force alignment classifier working directly from token sets. Kept
// independent of the boundary-lookup logic in span_alignment.cc.

#ifndef SACOIE_TESTS_ALIGNMENT_ORACLE_H_
#define SACOIE_TESTS_ALIGNMENT_ORACLE_H_

#include <set>
#include <span>
#include <vector>

#include "sacoie/align/span_alignment.h"
#include "test_util.h"

namespace sacoie::testing {

inline std::set<int> TokenSet(int start, int end) {
  std::set<int> s;
  for (int t = start; t <= end; ++t) s.insert(t);
  return s;
}

// Is `target` the union of chunks i..j for some i < j (multi) or i == j?
inline bool IsUnionOfChunks(const ChunkSequence &cs, const std::set<int> &target,
                            bool multi) {
  const int m = static_cast<int>(cs.chunks.size());
  for (int i = 0; i < m; ++i) {
    std::set<int> u;
    for (int j = i; j < m; ++j) {
      auto add = TokenSet(cs.chunks[j].start, cs.chunks[j].end);
      u.insert(add.begin(), add.end());
      if ((multi ? j > i : j == i) && u == target) return true;
    }
  }
  return false;
}

inline MatchCase OracleGoldCase(const TokenRange &g, const ChunkSequence &cs) {
  auto tokens = TokenSet(g.start, g.end);
  if (IsUnionOfChunks(cs, tokens, false)) return MatchCase::kMatchExact;
  if (IsUnionOfChunks(cs, tokens, true)) return MatchCase::kMatchConcatenation;
  return MatchCase::kMismatchOverlap;
}

inline MatchCase OracleChunkCase(const Chunk &c, const std::vector<TokenRange> &gold,
                                 const ChunkSequence &cs) {
  auto ct = TokenSet(c.start, c.end);
  for (const auto &g : gold) {
    if (TokenSet(g.start, g.end) == ct) return MatchCase::kMatchExact;
  }
  for (const auto &g : gold) {
    auto gt = TokenSet(g.start, g.end);
    bool strict_superset = gt.size() > ct.size();
    for (int t : ct) strict_superset = strict_superset && gt.count(t);
    if (strict_superset && IsUnionOfChunks(cs, gt, true)) {
      return MatchCase::kMatchConcatenation;
    }
  }
  return MatchCase::kMismatchNoOverlap;
}

inline bool OracleOverlaps(const Chunk &c, const std::vector<TokenRange> &gold) {
  for (const auto &g : gold) {
    for (int t = c.start; t <= c.end; ++t) {
      if (t >= g.start && t <= g.end) return true;
    }
  }
  return false;
}

inline AlignmentResult OracleAggregate(std::span<const AlignmentInput> corpus) {
  AlignmentResult r;
  for (const auto &s : corpus) {
    std::vector<TokenRange> gold;
    for (const auto &t : s.gold) {
      auto add = [&](const std::vector<int> &v) {
        int lo = v.front(), hi = v.front();
        for (int x : v) { lo = std::min(lo, x); hi = std::max(hi, x); }
        gold.push_back({lo, hi});
      };
      add(t.relation);
      for (const auto &a : t.arguments) add(a);
    }
    for (const auto &g : gold) r.recall.Add(OracleGoldCase(g, s.chunks), g.length());
    for (const auto &c : s.chunks.chunks) {
      auto k = OracleChunkCase(c, gold, s.chunks);
      r.precision.Add(k, c.length());
      if (k == MatchCase::kMismatchNoOverlap && OracleOverlaps(c, gold)) {
        ++r.precision.partial_overlap;
      }
    }
  }
  return r;
}

// Seeded synthetic corpus: up to 12 tokens, random chunkings and gold spans.
inline std::vector<AlignmentInput> SyntheticAlignmentCorpus(std::uint64_t seed,
                                                            int sentences) {
  Rng rng(seed);
  const std::vector<std::string> types = {"NP", "VP", "PP", "O"};
  std::vector<AlignmentInput> corpus;
  for (int i = 0; i < sentences; ++i) {
    AlignmentInput in;
    const int n = Uniform(rng, 1, 12);
    in.chunks = RandomChunking(rng, n, types);
    const int tuples = Uniform(rng, 0, 3);
    for (int k = 0; k < tuples; ++k) {
      auto span = [&] {
        int a = Uniform(rng, 0, n - 1), b = Uniform(rng, 0, n - 1);
        if (a > b) std::swap(a, b);
        std::vector<int> v;
        for (int t = a; t <= b; ++t) v.push_back(t);
        return v;
      };
      GoldTuple t;
      t.relation = span();
      for (int a = Uniform(rng, 1, 3); a > 0; --a) t.arguments.push_back(span());
      in.gold.push_back(std::move(t));
    }
    corpus.push_back(std::move(in));
  }
  return corpus;
}

}  // namespace sacoie::testing

#endif  // SACOIE_TESTS_ALIGNMENT_ORACLE_H_

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

// Rule-generated toy corpus and deterministic synthetic token embeddings,
// used for smoke tests, benchmarks and the bundled data/toy files.

#ifndef SACOIE_DATA_TOY_CORPUS_H_
#define SACOIE_DATA_TOY_CORPUS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/io/tuples_jsonl.h"

namespace sacoie {

struct ToyExample {
  AnnotatedSentence sentence;  // tokens, POS, verb flags, arcs
  ChunkSequence chunks;        // CoNLL-2000 chunk types
  std::vector<TupleEntry> tuples;
};

inline constexpr std::uint64_t kToySeed = 2026;
inline constexpr int kToySentences = 50;

// Sentences follow NP VP [NP] [PP NP] . with one main verb each; ids are
// "toy-000", "toy-001", ... Each sentence has one gold tuple: ARG0 = the
// subject NP, REL = the verb chunk, then the object NP and the PP + NP
// as further arguments in order.
std::vector<ToyExample> GenerateToyCorpus(std::uint64_t seed = kToySeed,
                                          int sentences = kToySentences);

// Expected L2 norm of a synthetic word vector.
inline constexpr double kSyntheticWordNorm = 4.0;

// Row i of a sentence is v(w_i) + 0.5 v(w_{i-1}) + 0.25 v(w_{i+1}), where
// v(w) is a Gaussian vector with std kSyntheticWordNorm / sqrt(dim) seeded
// by the word and `seed`. Same word, neighbors and seed give the same row on every run.
DenseMatrix SyntheticEmbedding(const AnnotatedSentence &s, int dim, std::uint64_t seed);

std::map<std::string, DenseMatrix> SyntheticEmbeddings(
    std::span<const AnnotatedSentence> sentences, int dim, std::uint64_t seed);

}  // namespace sacoie

#endif  // SACOIE_DATA_TOY_CORPUS_H_

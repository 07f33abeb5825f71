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

// Hand-built sentences used by several suites.

#ifndef SACOIE_TESTS_FIXTURES_H_
#define SACOIE_TESTS_FIXTURES_H_

#include <set>
#include <utility>

#include "sacoie/core/types.h"

namespace sacoie::testing {

// "Ms. Lee , the headmaster , told Lily and Jimmy that she is responsible ."
// with spaCy-style arcs and simple-phrase chunks.
inline AnnotatedSentence HeadmasterSentence() {
  AnnotatedSentence s;
  s.id = "headmaster";
  const char *words[] = {"Ms.", "Lee", ",", "the", "headmaster", ",", "told",
                         "Lily", "and", "Jimmy", "that", "she", "is",
                         "responsible", "."};
  const char *pos[] = {"NNP", "NNP", ",", "DT", "NN", ",", "VBD", "NNP",
                       "CC", "NNP", "IN", "PRP", "VBZ", "JJ", "."};
  for (int i = 0; i < 15; ++i) {
    s.tokens.push_back({i, words[i], pos[i], IsVerbTag(pos[i])});
  }
  s.arcs = {{1, 0, "compound"}, {6, 1, "nsubj"},  {1, 2, "punct"},
            {4, 3, "det"},      {1, 4, "appos"},  {1, 5, "punct"},
            {kRootHead, 6, "ROOT"}, {6, 7, "dobj"}, {7, 8, "cc"},
            {7, 9, "conj"},     {12, 10, "mark"}, {12, 11, "nsubj"},
            {6, 12, "ccomp"},   {12, 13, "acomp"}, {6, 14, "punct"}};
  return s;
}

inline ChunkSequence HeadmasterChunks() {
  return {"headmaster",
          {{0, 1, "Noun"},
           {2, 2, "O"},
           {3, 4, "Noun"},
           {5, 5, "O"},
           {6, 6, "Verbal"},
           {7, 9, "Noun"},
           {10, 10, "Function"},
           {11, 11, "Noun"},
           {12, 13, "Verbal"},
           {14, 14, "O"}}};
}

// Inter-chunk edges of the chunk-level tree for the sentence above.
inline std::set<std::pair<int, int>> HeadmasterChunkEdges() {
  return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5},
          {4, 8}, {4, 9}, {6, 8}, {7, 8}};
}

}  // namespace sacoie::testing

#endif  // SACOIE_TESTS_FIXTURES_H_

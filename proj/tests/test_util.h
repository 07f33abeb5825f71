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

// Seeded generators shared by the property-style tests.

#ifndef SACOIE_TESTS_TEST_UTIL_H_
#define SACOIE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie::testing {

using Rng = std::mt19937_64;

inline int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random exhaustive chunking of n tokens with types from `types`.
inline ChunkSequence RandomChunking(Rng &rng, int n,
                                    const std::vector<std::string> &types,
                                    int max_len = 4) {
  ChunkSequence cs;
  int t = 0;
  while (t < n) {
    int len = std::min(n - t, Uniform(rng, 1, max_len));
    std::string type = types[Uniform(rng, 0, static_cast<int>(types.size()) - 1)];
    if (type == "O") len = 1;
    cs.chunks.push_back({t, t + len - 1, type});
    t += len;
  }
  return cs;
}

// Random dependency tree: token order shuffled, each token attaches to an
// earlier token in that order.
inline std::vector<DependencyArc> RandomTree(Rng &rng, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<DependencyArc> arcs(n);
  static const char *kLabels[] = {"nsubj", "obj", "det", "amod", "case",
                                  "nmod", "advmod", "conj"};
  for (int k = 0; k < n; ++k) {
    int dep = order[k];
    int head = k == 0 ? kRootHead : order[Uniform(rng, 0, k - 1)];
    arcs[dep] = {head, dep, k == 0 ? "root" : kLabels[Uniform(rng, 0, 7)]};
  }
  return arcs;
}

inline AnnotatedSentence RandomSentence(Rng &rng, const std::string &id, int n,
                                        bool with_arcs = true) {
  static const char *kWords[] = {"the", "cat", "sat", "on", "a", "mat",
                                 "quickly", "and", "dog", "ran", "New", "York"};
  static const char *kPos[] = {"DT", "NN", "VBD", "IN", "DT", "NN",
                               "RB", "CC", "NN", "VBD", "NNP", "NNP"};
  AnnotatedSentence s;
  s.id = id;
  for (int i = 0; i < n; ++i) {
    int w = Uniform(rng, 0, 11);
    s.tokens.push_back({i, kWords[w], kPos[w], IsVerbTag(kPos[w])});
  }
  if (with_arcs) s.arcs = RandomTree(rng, n);
  return s;
}

}  // namespace sacoie::testing

#endif  // SACOIE_TESTS_TEST_UTIL_H_

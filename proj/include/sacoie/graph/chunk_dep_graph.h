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

// Chunk-level dependency graphs: token arcs inside a chunk are dropped, the
// remaining arcs connect chunk pairs, and each node carries the label of the
// arc from the chunk to its parent.

#ifndef SACOIE_GRAPH_CHUNK_DEP_GRAPH_H_
#define SACOIE_GRAPH_CHUNK_DEP_GRAPH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie {

inline constexpr char kRootLabel[] = "root";
// Label for chunks with no attaching arc (sentences without dependencies).
inline constexpr char kUnattachedLabel[] = "dep";

// A token arc lifted to the chunk level.
struct ChunkArc {
  int head = 0;
  int dependent = 0;
  std::string label;

  bool operator==(const ChunkArc &) const = default;
};

struct ChunkDepGraph {
  int num_nodes = 0;
  // Symmetric m x m matrix, row-major, diagonal always set.
  std::vector<std::uint8_t> adjacency;
  std::vector<std::string> labels;
  // Inter-chunk arcs in token order of their dependents.
  std::vector<ChunkArc> arcs;

  bool Edge(int i, int j) const { return adjacency[i * num_nodes + j] != 0; }
  // Undirected edges (i < j), self-loops excluded.
  std::vector<std::pair<int, int>> Edges() const;
};

ChunkDepGraph ToChunkGraph(const AnnotatedSentence &s, const ChunkSequence &cs);

// The chunk holding the sentence root is labelled "root"; any other chunk
// takes the label of its leftmost token whose head lies outside the chunk.
std::vector<std::string> LabelNodes(const AnnotatedSentence &s,
                                    const ChunkSequence &cs);

std::string ChunkGraphToJson(const ChunkDepGraph &g, const AnnotatedSentence &s,
                             const ChunkSequence &cs);

}  // namespace sacoie

#endif  // SACOIE_GRAPH_CHUNK_DEP_GRAPH_H_

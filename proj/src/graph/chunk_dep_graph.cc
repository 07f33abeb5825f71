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

#include "sacoie/graph/chunk_dep_graph.h"

#include <json.hpp>

namespace sacoie {

std::vector<std::pair<int, int>> ChunkDepGraph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_nodes; ++i) {
    for (int j = i + 1; j < num_nodes; ++j) {
      if (Edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::string> LabelNodes(const AnnotatedSentence &s,
                                    const ChunkSequence &cs) {
  const auto chunk_of = ChunkIndexTable(cs);
  std::vector<std::string> labels(cs.size());
  std::vector<bool> has_root(cs.size(), false);
  std::vector<int> head(s.size(), -2);
  for (const auto &arc : s.arcs) head[arc.dependent] = arc.head;

  for (std::size_t c = 0; c < cs.size(); ++c) {
    const auto &chunk = cs.chunks[c];
    for (int t = chunk.start; t <= chunk.end; ++t) {
      if (head[t] == kRootHead) has_root[c] = true;
    }
    if (has_root[c]) {
      labels[c] = kRootLabel;
      continue;
    }
    labels[c] = kUnattachedLabel;
    for (int t = chunk.start; t <= chunk.end; ++t) {
      if (head[t] >= 0 && chunk_of[head[t]] != static_cast<int>(c)) {
        labels[c] = s.ArcOf(t)->label;
        break;
      }
    }
  }
  return labels;
}

ChunkDepGraph ToChunkGraph(const AnnotatedSentence &s, const ChunkSequence &cs) {
  const auto chunk_of = ChunkIndexTable(cs);
  ChunkDepGraph g;
  g.num_nodes = static_cast<int>(cs.size());
  g.adjacency.assign(g.num_nodes * g.num_nodes, 0);
  for (int i = 0; i < g.num_nodes; ++i) g.adjacency[i * g.num_nodes + i] = 1;

  std::vector<const DependencyArc *> by_dependent(s.size(), nullptr);
  for (const auto &arc : s.arcs) by_dependent[arc.dependent] = &arc;
  for (const auto *arc : by_dependent) {
    if (arc == nullptr || arc->head == kRootHead) continue;
    const int hc = chunk_of[arc->head];
    const int dc = chunk_of[arc->dependent];
    if (hc == dc) continue;
    g.adjacency[hc * g.num_nodes + dc] = 1;
    g.adjacency[dc * g.num_nodes + hc] = 1;
    g.arcs.push_back({hc, dc, arc->label});
  }
  g.labels = LabelNodes(s, cs);
  return g;
}

std::string ChunkGraphToJson(const ChunkDepGraph &g, const AnnotatedSentence &s,
                             const ChunkSequence &cs) {
  using Json = nlohmann::ordered_json;
  Json nodes = Json::array();
  for (int i = 0; i < g.num_nodes; ++i) {
    const auto &c = cs.chunks[i];
    std::string text;
    for (int t = c.start; t <= c.end; ++t) {
      if (t > c.start) text += ' ';
      text += s.tokens[t].surface;
    }
    nodes.push_back({{"index", i},
                     {"start", c.start},
                     {"end", c.end},
                     {"type", c.type},
                     {"text", text},
                     {"label", g.labels[i]}});
  }
  Json edges = Json::array();
  for (auto [i, j] : g.Edges()) edges.push_back(Json::array({i, j}));
  Json arcs = Json::array();
  for (const auto &a : g.arcs) {
    arcs.push_back({{"head", a.head}, {"dependent", a.dependent}, {"label", a.label}});
  }
  Json j;
  j["id"] = s.id;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  j["arcs"] = std::move(arcs);
  return j.dump();
}

}  // namespace sacoie

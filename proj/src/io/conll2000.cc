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

#include "sacoie/io/conll2000.h"

#include <istream>
#include <ostream>
#include <sstream>

namespace sacoie {
namespace {

constexpr std::string_view kSentIdPrefix = "# sent_id = ";

struct Builder {
  ChunkedSentence current;
  std::string pending_id;
  bool has_pending_id = false;
  bool open = false;  // last chunk may still be continued by an I- tag

  bool empty() const { return current.sentence.tokens.empty(); }

  ChunkedSentence Finish(std::size_t position) {
    ChunkedSentence out = std::move(current);
    out.sentence.id = has_pending_id ? pending_id : std::to_string(position);
    out.chunks.sentence_id = out.sentence.id;
    current = {};
    has_pending_id = false;
    open = false;
    return out;
  }
};

}  // namespace

std::vector<ChunkedSentence> ParseConll2000(std::istream &in,
                                            std::vector<ParseWarning> *warnings,
                                            const std::string &source) {
  std::vector<ChunkedSentence> corpus;
  Builder b;
  std::string line;
  int line_no = 0;
  auto flush = [&] {
    if (!b.empty()) corpus.push_back(b.Finish(corpus.size()));
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kSentIdPrefix, 0) == 0) {
      flush();
      b.pending_id = line.substr(kSentIdPrefix.size());
      b.has_pending_id = true;
      continue;
    }
    std::istringstream fields(line);
    std::string surface, pos, tag, extra;
    if (!(fields >> surface)) {
      flush();
      continue;
    }
    if (!(fields >> pos >> tag) || (fields >> extra)) {
      throw FormatError(source, line_no, "expected 3 columns");
    }

    auto &sent = b.current.sentence;
    auto &chunks = b.current.chunks.chunks;
    const int index = static_cast<int>(sent.tokens.size());
    sent.tokens.push_back({index, surface, pos, IsVerbTag(pos)});

    if (tag == "O") {
      chunks.push_back({index, index, "O"});
      b.open = false;
      continue;
    }
    if (tag.size() < 3 || tag[1] != '-' || (tag[0] != 'B' && tag[0] != 'I')) {
      throw FormatError(source, line_no, "bad chunk tag '" + tag + "'");
    }
    std::string type = tag.substr(2);
    if (tag[0] == 'I') {
      if (b.open && chunks.back().type == type) {
        chunks.back().end = index;
        continue;
      }
      if (warnings != nullptr) {
        warnings->push_back({line_no, "stray " + tag + " treated as B-" + type});
      }
    }
    chunks.push_back({index, index, std::move(type)});
    b.open = true;
  }
  flush();
  return corpus;
}

std::vector<std::string> ChunkTags(const ChunkSequence &cs) {
  std::vector<std::string> tags;
  for (const auto &c : cs.chunks) {
    for (int t = c.start; t <= c.end; ++t) {
      if (c.type == "O") {
        tags.emplace_back("O");
      } else {
        tags.push_back((t == c.start ? "B-" : "I-") + c.type);
      }
    }
  }
  return tags;
}

void WriteConll2000(std::ostream &out, std::span<const ChunkedSentence> corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto &cs = corpus[i];
    if (cs.sentence.id != std::to_string(i)) {
      out << kSentIdPrefix << cs.sentence.id << '\n';
    }
    const auto tags = ChunkTags(cs.chunks);
    for (std::size_t t = 0; t < cs.sentence.tokens.size(); ++t) {
      const auto &tok = cs.sentence.tokens[t];
      out << tok.surface << ' ' << tok.pos << ' ' << tags.at(t) << '\n';
    }
    out << '\n';
  }
}

}  // namespace sacoie

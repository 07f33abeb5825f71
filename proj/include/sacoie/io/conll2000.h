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

// CoNLL-2000 chunking format: one "surface POS tag" line per token, tags in
// B-X / I-X / O form, blank line between sentences.
//
// Extension: a line "# sent_id = <id>" before a sentence names it. Without
// it a sentence is named by its 0-based position in the file, and the
// writer only emits the line for sentences whose id differs from that.

#ifndef SACOIE_IO_CONLL2000_H_
#define SACOIE_IO_CONLL2000_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/io/errors.h"

namespace sacoie {

struct ChunkedSentence {
  AnnotatedSentence sentence;
  ChunkSequence chunks;

  bool operator==(const ChunkedSentence &) const = default;
};

// Stray I-X tags (sentence start, after O, or after another type) are
// repaired to B-X and reported through `warnings`. Malformed lines throw
// FormatError.
std::vector<ChunkedSentence> ParseConll2000(
    std::istream &in, std::vector<ParseWarning> *warnings = nullptr,
    const std::string &source = "<conll2000>");

void WriteConll2000(std::ostream &out, std::span<const ChunkedSentence> corpus);

// B-/I- tags for a chunk sequence; O chunks yield "O" per token.
std::vector<std::string> ChunkTags(const ChunkSequence &cs);

}  // namespace sacoie

#endif  // SACOIE_IO_CONLL2000_H_

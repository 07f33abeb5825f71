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

// Binary token-embedding interchange file, little-endian throughout:
//   "SACE" | u16 version=1 | u32 dim | u64 count
//   count x { u32 id_len | id bytes | u32 tokens | tokens*dim f32 }

#ifndef SACOIE_IO_EMBEDDINGS_H_
#define SACOIE_IO_EMBEDDINGS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "sacoie/core/types.h"

namespace sacoie {

inline constexpr char kEmbeddingMagic[4] = {'S', 'A', 'C', 'E'};
inline constexpr std::uint16_t kEmbeddingVersion = 1;

struct EmbeddingFile {
  std::uint32_t dim = 0;
  std::map<std::string, DenseMatrix> matrices;
};

EmbeddingFile ReadEmbeddings(std::istream &in,
                             const std::string &source = "<embeddings>");

// All matrices must have `dim` columns. Records are written in id order.
void WriteEmbeddings(std::ostream &out, std::uint32_t dim,
                     const std::map<std::string, DenseMatrix> &matrices);

// Attaches embeddings to sentences by id. Throws InputError for a missing id
// or a row/width mismatch.
void JoinEmbeddings(std::span<AnnotatedSentence> sentences,
                    const EmbeddingFile &file);

}  // namespace sacoie

#endif  // SACOIE_IO_EMBEDDINGS_H_

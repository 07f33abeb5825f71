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

#include "sacoie/io/embeddings.h"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

#include "sacoie/io/binary.h"
#include "sacoie/io/errors.h"

namespace sacoie {

EmbeddingFile ReadEmbeddings(std::istream &in, const std::string &source) {
  LeReader r(in, source, "truncated embedding file");
  std::array<char, 4> magic;
  r.Bytes(magic.data(), magic.size());
  if (!std::equal(magic.begin(), magic.end(), kEmbeddingMagic)) {
    throw FormatError(source, 0, "bad magic, not an embedding file");
  }
  if (auto version = r.Uint<std::uint16_t>(); version != kEmbeddingVersion) {
    throw FormatError(source, 0,
                      "unsupported embedding version " + std::to_string(version));
  }
  EmbeddingFile file;
  file.dim = r.Uint<std::uint32_t>();
  if (file.dim == 0) throw FormatError(source, 0, "embedding dim must be > 0");
  const auto count = r.Uint<std::uint64_t>();
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto id_len = r.Uint<std::uint32_t>();
    std::string id(id_len, '\0');
    r.Bytes(id.data(), id_len);
    const auto tokens = r.Uint<std::uint32_t>();
    DenseMatrix m(tokens, file.dim);
    for (auto &v : m.data) v = r.Float();
    if (!file.matrices.emplace(std::move(id), std::move(m)).second) {
      throw FormatError(source, 0, "duplicate sentence id in embedding file");
    }
  }
  return file;
}

void WriteEmbeddings(std::ostream &out, std::uint32_t dim,
                     const std::map<std::string, DenseMatrix> &matrices) {
  out.write(kEmbeddingMagic, 4);
  PutUint<std::uint16_t>(out, kEmbeddingVersion);
  PutUint<std::uint32_t>(out, dim);
  PutUint<std::uint64_t>(out, matrices.size());
  for (const auto &[id, m] : matrices) {
    if (m.cols != dim) throw InputError("matrix width does not match dim");
    PutUint<std::uint32_t>(out, static_cast<std::uint32_t>(id.size()));
    out.write(id.data(), static_cast<std::streamsize>(id.size()));
    PutUint<std::uint32_t>(out, static_cast<std::uint32_t>(m.rows));
    for (float v : m.data) PutFloat(out, v);
  }
}

void JoinEmbeddings(std::span<AnnotatedSentence> sentences,
                    const EmbeddingFile &file) {
  for (auto &s : sentences) {
    auto it = file.matrices.find(s.id);
    if (it == file.matrices.end()) {
      throw InputError("no embeddings for sentence '" + s.id + "'");
    }
    if (it->second.rows != s.tokens.size()) {
      throw InputError("embedding dim mismatch for sentence '" + s.id + "': " +
                       std::to_string(it->second.rows) + " rows for " +
                       std::to_string(s.tokens.size()) + " tokens");
    }
    s.embeddings = it->second;
  }
}

}  // namespace sacoie

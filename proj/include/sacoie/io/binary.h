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

// Little-endian primitives for the binary file formats.

#ifndef SACOIE_IO_BINARY_H_
#define SACOIE_IO_BINARY_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "sacoie/io/errors.h"

namespace sacoie {

class LeReader {
 public:
  // Short reads throw FormatError(source, 0, truncated_message).
  LeReader(std::istream &in, std::string source, std::string truncated_message)
      : in_(in), source_(std::move(source)), truncated_(std::move(truncated_message)) {}

  void Bytes(char *dst, std::size_t n) {
    if (!in_.read(dst, static_cast<std::streamsize>(n))) {
      throw FormatError(source_, 0, truncated_);
    }
  }

  template <typename T>
  T Uint() {
    std::array<unsigned char, sizeof(T)> b;
    Bytes(reinterpret_cast<char *>(b.data()), b.size());
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= T(b[i]) << (8 * i);
    return v;
  }

  float Float() { return std::bit_cast<float>(Uint<std::uint32_t>()); }

 private:
  std::istream &in_;
  std::string source_;
  std::string truncated_;
};

template <typename T>
void PutUint(std::ostream &out, T v) {
  std::array<char, sizeof(T)> b;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  }
  out.write(b.data(), b.size());
}

inline void PutFloat(std::ostream &out, float v) {
  PutUint<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
}

}  // namespace sacoie

#endif  // SACOIE_IO_BINARY_H_

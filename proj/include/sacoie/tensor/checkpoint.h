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

// Model checkpoint files.
//
// Layout (little-endian):
//   "SACK"  u16 version  u32 header length  header (UTF-8 JSON)
//   f32 parameter data, parameters in header order, each row-major
//
// The header holds {"kind", "config", "params": [{"name", "rows", "cols"}]}.
// "config" is opaque to this module; models keep vocabularies and
// hyperparameters there.

#ifndef SACOIE_TENSOR_CHECKPOINT_H_
#define SACOIE_TENSOR_CHECKPOINT_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "sacoie/tensor/parameters.h"

namespace sacoie::autodiff {

inline constexpr char kCheckpointMagic[4] = {'S', 'A', 'C', 'K'};
inline constexpr std::uint16_t kCheckpointVersion = 1;

struct Checkpoint {
  std::string kind;
  nlohmann::ordered_json config;
  ParameterSet<float> params;
};

void WriteCheckpoint(std::ostream &out, const std::string &kind,
                     const nlohmann::ordered_json &config,
                     const ParameterSet<float> &params);

// Throws FormatError on bad magic, version, header or truncation.
Checkpoint ReadCheckpoint(std::istream &in, const std::string &source);

// Copies every parameter of `to` from the same-named one in `from`. Throws
// FormatError for missing parameters or shape mismatches.
void RestoreParameters(const ParameterSet<float> &from, ParameterSet<float> *to,
                       const std::string &source);

}  // namespace sacoie::autodiff

#endif  // SACOIE_TENSOR_CHECKPOINT_H_

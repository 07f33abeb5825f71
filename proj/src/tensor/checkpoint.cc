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

#include "sacoie/tensor/checkpoint.h"

#include <algorithm>
#include <array>

#include "sacoie/io/binary.h"
#include "sacoie/io/errors.h"

namespace sacoie::autodiff {

void WriteCheckpoint(std::ostream &out, const std::string &kind,
                     const nlohmann::ordered_json &config,
                     const ParameterSet<float> &params) {
  nlohmann::ordered_json header;
  header["kind"] = kind;
  header["config"] = config;
  header["params"] = nlohmann::ordered_json::array();
  for (const auto &p : params.params()) {
    header["params"].push_back(
        {{"name", p.name}, {"rows", p.tensor.rows()}, {"cols", p.tensor.cols()}});
  }
  const std::string text = header.dump();
  out.write(kCheckpointMagic, 4);
  PutUint<std::uint16_t>(out, kCheckpointVersion);
  PutUint<std::uint32_t>(out, static_cast<std::uint32_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  for (const auto &p : params.params()) {
    for (float v : p.tensor.values()) PutFloat(out, v);
  }
}

Checkpoint ReadCheckpoint(std::istream &in, const std::string &source) {
  LeReader r(in, source, "truncated checkpoint");
  std::array<char, 4> magic;
  r.Bytes(magic.data(), magic.size());
  if (!std::equal(magic.begin(), magic.end(), kCheckpointMagic)) {
    throw FormatError(source, 0, "bad magic, not a checkpoint");
  }
  if (auto version = r.Uint<std::uint16_t>(); version != kCheckpointVersion) {
    throw FormatError(source, 0,
                      "unsupported checkpoint version " + std::to_string(version));
  }
  std::string text(r.Uint<std::uint32_t>(), '\0');
  r.Bytes(text.data(), text.size());

  Checkpoint ckpt;
  try {
    auto header = nlohmann::ordered_json::parse(text);
    ckpt.kind = header.at("kind").get<std::string>();
    ckpt.config = header.at("config");
    for (const auto &p : header.at("params")) {
      ckpt.params.Add(p.at("name").get<std::string>(), p.at("rows").get<std::size_t>(),
                      p.at("cols").get<std::size_t>());
    }
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(source, 0, std::string("bad checkpoint header: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw FormatError(source, 0, std::string("bad checkpoint header: ") + e.what());
  }
  for (auto &p : ckpt.params.params()) {
    for (auto &v : p.tensor.mutable_values()) v = r.Float();
  }
  ckpt.params.CheckFinite();
  return ckpt;
}

void RestoreParameters(const ParameterSet<float> &from, ParameterSet<float> *to,
                       const std::string &source) {
  for (auto &p : to->params()) {
    if (!from.Contains(p.name)) {
      throw FormatError(source, 0, "checkpoint lacks parameter " + p.name);
    }
    const auto &src = from.Get(p.name);
    if (src.rows() != p.tensor.rows() || src.cols() != p.tensor.cols()) {
      throw FormatError(source, 0, "parameter " + p.name + " has the wrong shape");
    }
    std::copy(src.values().begin(), src.values().end(), p.tensor.mutable_values().begin());
  }
}

}  // namespace sacoie::autodiff

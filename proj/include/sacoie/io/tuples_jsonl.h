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

// One JSON object per line:
//   {"id": "...", "tokens": [...], "pos": [...], "verbs": [i...],
//    "arcs": [[head, dep, "label"]...],
//    "tuples": [{"rel": [i...], "args": [[i...]...]}...]}
// Arc heads are 0-based token indices with -1 for ROOT. Tuples may carry an
// optional "conf" (prediction confidence), "verb" (relation indicator
// index) and "synset" (fact-group id).

#ifndef SACOIE_IO_TUPLES_JSONL_H_
#define SACOIE_IO_TUPLES_JSONL_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie {

struct TupleEntry {
  GoldTuple tuple;
  std::optional<double> confidence;
  std::optional<int> verb;
  std::optional<int> synset;

  bool operator==(const TupleEntry &) const = default;
};

struct TupleRecord {
  AnnotatedSentence sentence;
  std::vector<TupleEntry> tuples;

  bool operator==(const TupleRecord &) const = default;
};

std::vector<TupleRecord> ParseTuples(std::istream &in,
                                     const std::string &source = "<tuples>");

void WriteTuples(std::ostream &out, std::span<const TupleRecord> records);

}  // namespace sacoie

#endif  // SACOIE_IO_TUPLES_JSONL_H_

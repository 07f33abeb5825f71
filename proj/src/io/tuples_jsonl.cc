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

#include "sacoie/io/tuples_jsonl.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "sacoie/io/errors.h"

namespace sacoie {
namespace {

using Json = nlohmann::ordered_json;

class RecordReader {
 public:
  RecordReader(const std::string &source, int record)
      : source_(source), record_(record) {}

  [[noreturn]] void Fail(const std::string &what) const {
    throw FormatError(source_, record_, what);
  }

  const Json &Require(const Json &obj, const char *key) const {
    auto it = obj.find(key);
    if (it == obj.end()) Fail(std::string("missing \"") + key + "\"");
    return *it;
  }

  // Sorted, in-range index array.
  std::vector<int> Indices(const Json &arr, int n, const char *what) const {
    if (!arr.is_array()) Fail(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto &v : arr) {
      if (!v.is_number_integer()) Fail(std::string(what) + " must hold integers");
      int i = v.get<int>();
      if (i < 0 || i >= n) {
        Fail(std::string(what) + " index " + std::to_string(i) + " out of range");
      }
      if (!out.empty() && i <= out.back()) {
        Fail(std::string(what) + " indices must be strictly ascending");
      }
      out.push_back(i);
    }
    return out;
  }

 private:
  const std::string &source_;
  int record_;
};

TupleRecord ParseRecord(const Json &obj, const RecordReader &r) {
  if (!obj.is_object()) r.Fail("record must be a JSON object");
  TupleRecord rec;
  auto &s = rec.sentence;
  const auto &id = r.Require(obj, "id");
  if (!id.is_string()) r.Fail("\"id\" must be a string");
  s.id = id.get<std::string>();

  const auto &tokens = r.Require(obj, "tokens");
  if (!tokens.is_array()) r.Fail("\"tokens\" must be an array");
  for (const auto &t : tokens) {
    if (!t.is_string() || t.get<std::string>().empty()) {
      r.Fail("tokens must be non-empty strings");
    }
    const int index = static_cast<int>(s.tokens.size());
    s.tokens.push_back({index, t.get<std::string>(), "", false});
  }
  const int n = static_cast<int>(s.tokens.size());

  if (auto it = obj.find("pos"); it != obj.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != n) {
      r.Fail("\"pos\" must have one tag per token");
    }
    for (int i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) r.Fail("pos tags must be strings");
      s.tokens[i].pos = (*it)[i].get<std::string>();
    }
  }
  if (auto it = obj.find("verbs"); it != obj.end()) {
    for (int v : r.Indices(*it, n, "verbs")) s.tokens[v].is_verb = true;
  }
  if (auto it = obj.find("arcs"); it != obj.end()) {
    if (!it->is_array()) r.Fail("\"arcs\" must be an array");
    for (const auto &a : *it) {
      if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer() ||
          !a[1].is_number_integer() || !a[2].is_string()) {
        r.Fail("arcs must be [head, dependent, \"label\"]");
      }
      DependencyArc arc{a[0].get<int>(), a[1].get<int>(), a[2].get<std::string>()};
      if (arc.dependent < 0 || arc.dependent >= n ||
          (arc.head != kRootHead && (arc.head < 0 || arc.head >= n))) {
        r.Fail("arc index out of range");
      }
      s.arcs.push_back(std::move(arc));
    }
  }

  const auto &tuples = r.Require(obj, "tuples");
  if (!tuples.is_array()) r.Fail("\"tuples\" must be an array");
  for (const auto &t : tuples) {
    if (!t.is_object()) r.Fail("tuple must be an object");
    TupleEntry e;
    e.tuple.relation = r.Indices(r.Require(t, "rel"), n, "rel");
    if (e.tuple.relation.empty()) r.Fail("\"rel\" must not be empty");
    const auto &args = r.Require(t, "args");
    if (!args.is_array()) r.Fail("\"args\" must be an array");
    for (const auto &a : args) {
      e.tuple.arguments.push_back(r.Indices(a, n, "args"));
      if (e.tuple.arguments.back().empty()) r.Fail("argument must not be empty");
    }
    if (auto it = t.find("conf"); it != t.end()) {
      if (!it->is_number()) r.Fail("\"conf\" must be a number");
      e.confidence = it->get<double>();
    }
    if (auto it = t.find("verb"); it != t.end()) {
      if (!it->is_number_integer()) r.Fail("\"verb\" must be an integer");
      e.verb = it->get<int>();
      if (*e.verb < 0 || *e.verb >= n) r.Fail("\"verb\" out of range");
    }
    if (auto it = t.find("synset"); it != t.end()) {
      if (!it->is_number_integer()) r.Fail("\"synset\" must be an integer");
      e.synset = it->get<int>();
    }
    rec.tuples.push_back(std::move(e));
  }
  return rec;
}

}  // namespace

std::vector<TupleRecord> ParseTuples(std::istream &in, const std::string &source) {
  std::vector<TupleRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RecordReader reader(source, line_no);
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error &e) {
      reader.Fail(std::string("invalid JSON: ") + e.what());
    }
    out.push_back(ParseRecord(obj, reader));
  }
  return out;
}

void WriteTuples(std::ostream &out, std::span<const TupleRecord> records) {
  for (const auto &rec : records) {
    const auto &s = rec.sentence;
    Json obj;
    obj["id"] = s.id;
    Json tokens = Json::array(), pos = Json::array(), verbs = Json::array();
    for (const auto &t : s.tokens) {
      tokens.push_back(t.surface);
      pos.push_back(t.pos);
      if (t.is_verb) verbs.push_back(t.index);
    }
    obj["tokens"] = std::move(tokens);
    obj["pos"] = std::move(pos);
    obj["verbs"] = std::move(verbs);
    Json arcs = Json::array();
    for (const auto &a : s.arcs) arcs.push_back(Json::array({a.head, a.dependent, a.label}));
    obj["arcs"] = std::move(arcs);
    Json tuples = Json::array();
    for (const auto &e : rec.tuples) {
      Json t;
      t["rel"] = e.tuple.relation;
      t["args"] = e.tuple.arguments;
      if (e.confidence) t["conf"] = *e.confidence;
      if (e.verb) t["verb"] = *e.verb;
      if (e.synset) t["synset"] = *e.synset;
      tuples.push_back(std::move(t));
    }
    obj["tuples"] = std::move(tuples);
    out << obj.dump() << '\n';
  }
}

}  // namespace sacoie

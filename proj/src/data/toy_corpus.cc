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

#include "sacoie/data/toy_corpus.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <string_view>

namespace sacoie {
namespace {

struct Word {
  const char *surface;
  const char *pos;
};

constexpr Word kDeterminers[] = {{"the", "DT"}, {"a", "DT"}, {"every", "DT"},
                                 {"his", "PRP$"}, {"her", "PRP$"}};
constexpr Word kAdjectives[] = {{"old", "JJ"}, {"young", "JJ"}, {"small", "JJ"},
                                {"clever", "JJ"}, {"quiet", "JJ"}};
constexpr Word kNouns[] = {{"cat", "NN"},     {"dog", "NN"},     {"farmer", "NN"},
                           {"teacher", "NN"}, {"horse", "NN"},   {"book", "NN"},
                           {"mouse", "NN"},   {"neighbor", "NN"}, {"river", "NN"},
                           {"garden", "NN"},  {"letter", "NN"},  {"student", "NN"}};
constexpr Word kVerbs[] = {{"chased", "VBD"}, {"sold", "VBD"},    {"found", "VBD"},
                           {"saw", "VBD"},    {"painted", "VBD"}, {"carried", "VBD"}};
constexpr Word kBareVerbs[] = {{"chase", "VB"}, {"sell", "VB"},  {"find", "VB"},
                               {"see", "VB"},   {"paint", "VB"}, {"carry", "VB"}};
constexpr Word kModals[] = {{"will", "MD"}, {"could", "MD"}, {"must", "MD"}};
constexpr Word kPrepositions[] = {{"to", "IN"}, {"in", "IN"}, {"near", "IN"},
                                  {"with", "IN"}, {"behind", "IN"}};

class Builder {
 public:
  explicit Builder(std::mt19937_64 &rng) : rng_(rng) {}

  template <std::size_t N>
  const Word &Pick(const Word (&words)[N]) {
    return words[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
  }
  bool Coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  int Add(const Word &w) {
    const int i = static_cast<int>(ex.sentence.tokens.size());
    ex.sentence.tokens.push_back({i, w.surface, w.pos, IsVerbTag(w.pos)});
    heads_.push_back(kRootHead);
    labels_.emplace_back("root");
    return i;
  }
  void Attach(int dep, int head, const char *label) {
    heads_[dep] = head;
    labels_[dep] = label;
  }
  void AddChunk(int start, int end, const char *type) { ex.chunks.chunks.push_back({start, end, type}); }

  // [DT] [JJ] NN; returns (start, head noun).
  std::pair<int, int> NounPhrase() {
    const int start = static_cast<int>(ex.sentence.tokens.size());
    std::vector<std::pair<int, const char *>> mods;
    if (Coin(0.8)) mods.push_back({Add(Pick(kDeterminers)), "det"});
    if (Coin(0.35)) mods.push_back({Add(Pick(kAdjectives)), "amod"});
    const int noun = Add(Pick(kNouns));
    for (auto [m, label] : mods) Attach(m, noun, label);
    AddChunk(start, noun, "NP");
    return {start, noun};
  }

  void Finish() {
    for (std::size_t i = 0; i < heads_.size(); ++i) {
      ex.sentence.arcs.push_back({heads_[i], static_cast<int>(i), labels_[i]});
    }
  }

  ToyExample ex;

 private:
  std::mt19937_64 &rng_;
  std::vector<int> heads_;
  std::vector<std::string> labels_;
};

std::vector<int> Range(int start, int end) {
  std::vector<int> out;
  for (int t = start; t <= end; ++t) out.push_back(t);
  return out;
}

}  // namespace

std::vector<ToyExample> GenerateToyCorpus(std::uint64_t seed, int sentences) {
  std::mt19937_64 rng(seed);
  std::vector<ToyExample> corpus;
  for (int k = 0; k < sentences; ++k) {
    Builder b(rng);
    char id[32];
    std::snprintf(id, sizeof(id), "toy-%03d", k);
    b.ex.sentence.id = id;
    b.ex.chunks.sentence_id = id;

    const auto [subj_start, subj] = b.NounPhrase();
    const int verb_start = static_cast<int>(b.ex.sentence.tokens.size());
    int verb;
    if (b.Coin(0.3)) {
      const int modal = b.Add(b.Pick(kModals));
      verb = b.Add(b.Pick(kBareVerbs));
      b.Attach(modal, verb, "aux");
    } else {
      verb = b.Add(b.Pick(kVerbs));
    }
    b.AddChunk(verb_start, verb, "VP");
    b.Attach(subj, verb, "nsubj");

    GoldTuple tuple;
    tuple.relation = Range(verb_start, verb);
    tuple.arguments.push_back(Range(subj_start, verb_start - 1));

    // Object and prepositional phrase; at least one of them.
    const int shape = std::uniform_int_distribution<int>(0, 2)(rng);
    if (shape != 1) {
      const auto [obj_start, obj] = b.NounPhrase();
      b.Attach(obj, verb, "dobj");
      tuple.arguments.push_back(Range(obj_start, obj));
    }
    if (shape != 0) {
      const int prep = b.Add(b.Pick(kPrepositions));
      b.AddChunk(prep, prep, "PP");
      b.Attach(prep, verb, "prep");
      const auto [pobj_start, pobj] = b.NounPhrase();
      b.Attach(pobj, prep, "pobj");
      tuple.arguments.push_back(Range(prep, pobj));
    }
    const int stop = b.Add({".", "."});
    b.AddChunk(stop, stop, "O");
    b.Attach(stop, verb, "punct");
    b.Finish();
    b.ex.tuples.push_back({tuple, std::nullopt, verb, std::nullopt});
    corpus.push_back(std::move(b.ex));
  }
  return corpus;
}

namespace {

// FNV-1a; fixed so vectors do not depend on the standard library's hash.
std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<double> WordVector(const std::string &word, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(Fnv1a(word) ^ (seed * 0x9e3779b97f4a7c15ULL));
  std::normal_distribution<double> dist(
      0.0, kSyntheticWordNorm / std::sqrt(static_cast<double>(dim)));
  std::vector<double> v(dim);
  for (auto &x : v) x = dist(rng);
  return v;
}

}  // namespace

DenseMatrix SyntheticEmbedding(const AnnotatedSentence &s, int dim, std::uint64_t seed) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<std::vector<double>> words;
  for (const auto &tok : s.tokens) words.push_back(WordVector(tok.surface, dim, seed));
  DenseMatrix m(n, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) {
      double v = words[i][j];
      if (i > 0) v += 0.5 * words[i - 1][j];
      if (i + 1 < n) v += 0.25 * words[i + 1][j];
      m.at(i, j) = static_cast<float>(v);
    }
  }
  return m;
}

std::map<std::string, DenseMatrix> SyntheticEmbeddings(
    std::span<const AnnotatedSentence> sentences, int dim, std::uint64_t seed) {
  std::map<std::string, DenseMatrix> out;
  for (const auto &s : sentences) out[s.id] = SyntheticEmbedding(s, dim, seed);
  return out;
}

}  // namespace sacoie

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <doctest.h>

#include "sacoie/data/toy_corpus.h"
#include "sacoie/io/errors.h"
#include "sacoie/oie/extractor.h"
#include "sacoie/oie/tags.h"
#include "sacoie/tensor/grad_check.h"
#include "model_util.h"
#include "test_util.h"

namespace sacoie {
namespace {

using autodiff::Tensor;
using testing::Rng;

const ChunkInventory kInventory{"small", {"NP", "VP", "PP", "O"}};

int B(Role r) { return BeginTag(r); }
int I(Role r) { return InsideTag(r); }
constexpr Role kRel = Role::kRel, kA0 = Role::kArg0, kA1 = Role::kArg1, kA2 = Role::kArg2;

TEST_CASE("tag inventory") {
  CHECK(kTagCount == 15);
  const auto names = TagNames();
  CHECK(names.front() == "O");
  CHECK(names[1] == "B-REL");
  CHECK(names[2] == "I-REL");
  CHECK(names.back() == "I-ARG5");
  for (int t = 0; t < kTagCount; ++t) CHECK(ParseTag(TagName(t)) == t);
  CHECK(ParseTag("B-ARG6") == -1);
}

ChunkSequence Chunks(std::vector<std::pair<int, int>> spans) {
  ChunkSequence cs{"s", {}};
  for (auto [a, b] : spans) cs.chunks.push_back({a, b, "NP"});
  return cs;
}

TEST_CASE("gold chunk tags, expansion and conflicts") {
  // chunks: [0..1] [2] [3..4] [5] [6..7]
  auto cs = Chunks({{0, 1}, {2, 2}, {3, 4}, {5, 5}, {6, 7}});
  GoldTagStats stats;
  auto tags = GoldChunkTags(cs, {{2}, {{0, 1}, {3, 4, 5, 6, 7}}}, &stats);
  CHECK(tags == std::vector<int>{B(kA0), B(kRel), B(kA1), I(kA1), I(kA1)});
  CHECK(stats.spans == 3);
  CHECK(stats.expanded == 0);

  // ARG0 = token 1 cuts chunk [0..1]; widened to the whole chunk.
  tags = GoldChunkTags(cs, {{2}, {{1}, {5}}}, &stats);
  CHECK(tags == std::vector<int>{B(kA0), B(kRel), kOutsideTag, B(kA1), kOutsideTag});
  CHECK(stats.expanded == 1);
  CHECK(ProjectTags(tags, cs) ==
        std::vector<int>{B(kA0), B(kA0), B(kRel), 0, 0, B(kA1), 0, 0});

  // Overlapping slots: REL keeps chunk 1.
  tags = GoldChunkTags(cs, {{2}, {{2, 3}}}, &stats);
  CHECK(tags == std::vector<int>{0, B(kRel), I(kA0), 0, 0});
  CHECK(stats.conflicts == 1);

  GoldTuple wide{{2}, {{0}, {3}, {5}, {6}, {7}, {1}, {4}}};
  CHECK_THROWS_AS(GoldChunkTags(cs, wide), InputError);
  CHECK_THROWS_AS(GoldChunkTags(cs, {{9}, {{0}}}), InputError);
}

std::vector<std::vector<double>> OneHot(std::vector<int> tags, double p = 1.0) {
  std::vector<std::vector<double>> rows;
  for (int t : tags) {
    std::vector<double> row(kTagCount, (1 - p) / (kTagCount - 1));
    row[t] = p;
    rows.push_back(row);
  }
  return rows;
}

TEST_CASE("decode tuples") {
  auto cs3 = Chunks({{0, 0}, {1, 1}, {2, 3}});
  SUBCASE("one span per chunk") {
    auto out = DecodeTuples(OneHot({B(kA0), B(kRel), B(kA1)}), cs3, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].relation.chunk_span == TokenRange{1, 1});
    REQUIRE(out[0].arguments.size() == 2);
    CHECK(out[0].arguments[0].role == kA0);
    CHECK(out[0].arguments[0].chunk_span == TokenRange{0, 0});
    CHECK(out[0].arguments[1].token_span == TokenRange{2, 3});
    CHECK(out[0].confidence == doctest::Approx(1.0));
    CHECK(out[0].verb_index == 1);
  }
  SUBCASE("all O gives nothing") {
    CHECK(DecodeTuples(OneHot({0, 0, 0}), cs3, 1).empty());
  }
  SUBCASE("orphan I- tags open a span") {
    auto cs4 = Chunks({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    auto out = DecodeTuples(OneHot({I(kA0), I(kA0), B(kRel), B(kA1)}), cs4, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].arguments[0].chunk_span == TokenRange{0, 1});
    CHECK(out[0].arguments[0].token_span == TokenRange{0, 1});
    // I-ARG1 after B-REL is an orphan too; it cannot extend the REL run.
    out = DecodeTuples(OneHot({B(kA0), B(kRel), I(kA1), I(kA1)}), cs4, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[0].relation.chunk_span == TokenRange{1, 1});
    CHECK(out[0].arguments[1].chunk_span == TokenRange{2, 3});
  }
  SUBCASE("relation needs an argument and arguments need a relation") {
    CHECK(DecodeTuples(OneHot({0, B(kRel), 0}), cs3, 1).empty());
    CHECK(DecodeTuples(OneHot({B(kA0), 0, B(kA1)}), cs3, 1).empty());
  }
  SUBCASE("the relation run holding the verb wins; first run per role") {
    auto cs5 = Chunks({{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
    auto out = DecodeTuples(OneHot({B(kRel), B(kA0), B(kRel), B(kA0), B(kA2)}), cs5, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].relation.chunk_span == TokenRange{2, 2});
    REQUIRE(out[0].arguments.size() == 2);
    CHECK(out[0].arguments[0].chunk_span == TokenRange{1, 1});
    CHECK(out[0].arguments[1].role == kA2);
    out = DecodeTuples(OneHot({B(kRel), B(kA0), B(kRel), B(kA0), B(kA2)}), cs5, 4);
    CHECK(out[0].relation.chunk_span == TokenRange{0, 0});
  }
  SUBCASE("confidence is the geometric mean over non-O chunks") {
    auto rows = OneHot({B(kA0), 0, B(kRel)}, 0.8);
    rows[0][B(kA0)] = 0.5;
    rows[0][0] = 0.0;
    auto out = DecodeTuples(rows, cs3, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0].confidence == doctest::Approx(std::sqrt(0.5 * 0.8)));
  }
}

TEST_CASE("decoded spans are contiguous, chunk aligned and role ordered") {
  Rng rng(71);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = testing::Uniform(rng, 1, 12);
    auto cs = testing::RandomChunking(rng, n, kInventory.types);
    std::vector<std::vector<double>> rows(cs.size(), std::vector<double>(kTagCount));
    for (auto &row : rows)
      for (auto &p : row) p = u(rng) * u(rng);
    for (const auto &t : DecodeTuples(rows, cs, testing::Uniform(rng, 0, n - 1))) {
      std::vector<TupleSpan> spans = {t.relation};
      spans.insert(spans.end(), t.arguments.begin(), t.arguments.end());
      for (const auto &s : spans) {
        CHECK(s.chunk_span.start <= s.chunk_span.end);
        CHECK(s.token_span.start == cs.chunks[s.chunk_span.start].start);
        CHECK(s.token_span.end == cs.chunks[s.chunk_span.end].end);
      }
      CHECK(t.relation.role == Role::kRel);
      CHECK_FALSE(t.arguments.empty());
      for (std::size_t k = 1; k < t.arguments.size(); ++k) {
        CHECK(static_cast<int>(t.arguments[k - 1].role) < static_cast<int>(t.arguments[k].role));
      }
      CHECK(t.confidence > 0.0);
      CHECK(t.confidence <= 1.0);
    }
  }
}

OieModel SmallModel(int dh, int dl, int layers = 1) {
  return OieModel({.hidden_dim = dh, .label_dim = dl, .gcn_layers = layers}, kInventory,
                  {"nsubj", "root", "obj", "det", "amod", "case", "nmod", "advmod", "conj"});
}

AnnotatedSentence Fixed(int n, int dim, std::vector<float> values) {
  AnnotatedSentence s;
  s.id = "f";
  for (int i = 0; i < n; ++i) s.tokens.push_back({i, "w" + std::to_string(i), "NN", false});
  DenseMatrix m(n, dim);
  m.data = std::move(values);
  s.embeddings = m;
  return s;
}

TEST_CASE("chunk encoding: passthrough, mean and type row") {
  auto model = SmallModel(2, 2);
  auto s = Fixed(3, 2, {1, 2, 3, 4, 5, 7});
  ChunkSequence cs{"f", {{0, 0, "NP"}, {1, 2, "VP"}}};
  // Zero W_verb and W_type: single-token chunk = token, two tokens = mean.
  auto h = EncodeChunks(model, model.params, s, cs, 0);
  CHECK(std::vector<float>(h.values().begin(), h.values().end()) == std::vector<float>{1, 2, 4, 5.5});

  auto &verb = model.params.Get("W_verb");
  verb.mutable_values()[2] = 10;  // active-verb row, column 0
  auto &type = model.params.Get("W_type");
  type.mutable_values()[2] = 0.25f;  // VP row
  type.mutable_values()[3] = -1;
  h = EncodeChunks(model, model.params, s, cs, 2);
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(1, 0) == doctest::Approx((3 + 5 + 10) / 2.0 + 0.25));
  CHECK(h.at(1, 1) == doctest::Approx((4 + 7) / 2.0 - 1));

  CHECK_THROWS_AS(EncodeChunks(model, model.params, s, cs, 3), std::out_of_range);
  ChunkSequence bad{"f", {{0, 2, "ADJP"}}};
  CHECK_THROWS_AS(EncodeChunks(model, model.params, s, bad, 0), InputError);
}

TEST_CASE("gcn on a single node gives alpha exactly 1") {
  Rng rng(4);
  auto model = SmallModel(3, 2);
  model.params.Initialize(1);
  auto x = testing::RandomOieInstance(rng, 3, {"NP"}, 1);
  auto out = OieForward(model, model.params, x.sentence, x.chunks, x.graph, 0);
  REQUIRE(out.gcn.alpha[0].size() == 1);
  CHECK(out.gcn.alpha[0].item() == 1.0f);
}

TEST_CASE("gcn matches a direct two-node computation") {
  auto model = SmallModel(2, 2);
  auto set = [&](const char *name, std::vector<float> v) {
    auto dst = model.params.Get(name).mutable_values();
    REQUIRE(dst.size() >= v.size());
    std::copy(v.begin(), v.end(), dst.begin());
  };
  // Labels: row 0 unknown, then sorted vocabulary.
  const int nsubj = model.LabelIndex("nsubj"), root = model.LabelIndex("root");
  std::vector<float> wdep(model.params.Get("W_dep").size(), 0.0f);
  wdep[nsubj * 2 + 0] = 0.5f;
  wdep[nsubj * 2 + 1] = -1.0f;
  wdep[root * 2 + 0] = 0.2f;
  wdep[root * 2 + 1] = 0.3f;
  set("W_dep", wdep);
  set("W_l0", {1.0f, 2.0f, -0.5f, 0.25f});
  set("b0", {0.1f, -0.2f});

  const std::vector<std::vector<double>> h = {{0.3, -0.4}, {1.2, 0.6}};
  Tensor<float> hc(2, 2, std::vector<float>{0.3f, -0.4f, 1.2f, 0.6f});
  ChunkDepGraph g;
  g.num_nodes = 2;
  g.adjacency = {1, 1, 1, 1};
  g.labels = {"nsubj", "root"};
  auto out = GcnForward(model, model.params, hc, g);

  // Oracle.
  const std::vector<std::vector<double>> l = {{0.5, -1.0}, {0.2, 0.3}};
  const double wl[2][2] = {{1.0, 2.0}, {-0.5, 0.25}};
  const double b[2] = {0.1, -0.2};
  std::vector<std::vector<double>> m(2), v(2, std::vector<double>(2));
  for (int i = 0; i < 2; ++i) {
    m[i] = {h[i][0], h[i][1], l[i][0], l[i][1]};
    for (int r = 0; r < 2; ++r) v[i][r] = h[i][r] + wl[r][0] * l[i][0] + wl[r][1] * l[i][1] + b[r];
  }
  for (int i = 0; i < 2; ++i) {
    double s[2], z = 0;
    for (int j = 0; j < 2; ++j) {
      s[j] = std::exp(std::inner_product(m[i].begin(), m[i].end(), m[j].begin(), 0.0));
      z += s[j];
    }
    for (int r = 0; r < 2; ++r) {
      const double a0 = s[0] / z, a1 = s[1] / z;
      CHECK(out.alpha[0].at(i, 0) == doctest::Approx(a0).epsilon(1e-6));
      const double expected = std::max(0.0, a0 * v[0][r] + a1 * v[1][r]);
      CHECK(out.hidden.at(i, r) == doctest::Approx(expected).epsilon(1e-6));
    }
  }

  g.adjacency = {1, 0, 0, 1};
  out = GcnForward(model, model.params, hc, g);
  CHECK(out.alpha[0].at(0, 1) == 0.0f);
  CHECK(out.alpha[0].at(0, 0) == 1.0f);

  ChunkDepGraph three;
  three.num_nodes = 3;
  three.adjacency.assign(9, 1);
  three.labels = {"a", "b", "c"};
  CHECK_THROWS_AS(GcnForward(model, model.params, hc, three), std::invalid_argument);
}

TEST_CASE("alpha rows sum to one and hidden states are non-negative") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto model = SmallModel(testing::Uniform(rng, 1, 6), testing::Uniform(rng, 1, 5),
                            testing::Uniform(rng, 1, 2));
    model.params.Initialize(rng());
    testing::Scramble(rng, model.params, 0.6);
    auto x = testing::RandomOieInstance(rng, model.config.hidden_dim, kInventory.types, 10);
    auto out = OieForward(model, model.params, x.sentence, x.chunks, x.graph, x.verb);
    for (const auto &alpha : out.gcn.alpha) {
      for (std::size_t i = 0; i < alpha.rows(); ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < alpha.cols(); ++j) {
          sum += alpha.at(i, j);
          if (!x.graph.Edge(static_cast<int>(i), static_cast<int>(j))) CHECK(alpha.at(i, j) == 0.0f);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
      }
    }
    for (float v : out.gcn.hidden.values()) CHECK(v >= 0.0f);
    for (std::size_t c = 0; c < out.chunk_probs.rows(); ++c) {
      double sum = 0;
      for (std::size_t t = 0; t < kTagCount; ++t) sum += out.chunk_probs.at(c, t);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("zero weights give uniform tag distributions") {
  Rng rng(2);
  auto model = SmallModel(4, 3);
  auto x = testing::RandomOieInstance(rng, 4, kInventory.types);
  auto out = OieForward(model, model.params, x.sentence, x.chunks, x.graph, x.verb);
  for (float p : out.chunk_probs.values()) CHECK(p == doctest::Approx(1.0 / kTagCount));
}

TEST_CASE("projection copies chunk rows to tokens") {
  Tensor<double> probs(2, 3, std::vector<double>{0.2, 0.3, 0.5, 0.1, 0.1, 0.8});
  ChunkSequence cs{"s", {{0, 2, "NP"}, {3, 3, "VP"}}};
  auto tok = ProjectToTokens(probs, cs);
  REQUIRE(tok.rows() == 4);
  for (int t = 0; t < 3; ++t)
    for (int k = 0; k < 3; ++k) CHECK(tok.at(t, k) == probs.at(0, k));
  for (int k = 0; k < 3; ++k) CHECK(tok.at(3, k) == probs.at(1, k));
  ChunkSequence singles{"s", {{0, 0, "NP"}, {1, 1, "VP"}}};
  auto id = ProjectToTokens(probs, singles);
  CHECK(std::equal(id.values().begin(), id.values().end(), probs.values().begin()));
  CHECK_THROWS_AS(ProjectToTokens(probs, ChunkSequence{"s", {{0, 0, "NP"}}}), std::invalid_argument);
}

TEST_CASE("extraction loss closed forms") {
  std::vector<int> gold = {B(kA0), B(kRel), 0, B(kA1)};
  std::vector<double> perfect;
  for (int t : gold) {
    std::vector<double> row(kTagCount, 0.0);
    row[t] = 1.0;
    perfect.insert(perfect.end(), row.begin(), row.end());
  }
  CHECK(OieLoss(Tensor<double>(4, kTagCount, perfect), gold).item() == 0.0);
  Tensor<double> uniform(4, kTagCount, std::vector<double>(4 * kTagCount, 1.0 / kTagCount));
  CHECK(OieLoss(uniform, gold).item() == doctest::Approx(4 * std::log(15.0)));
  CHECK_THROWS_AS(OieLoss(uniform, std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("composite extraction loss gradients match finite differences") {
  Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    auto model = SmallModel(testing::Uniform(rng, 1, 6), testing::Uniform(rng, 1, 5),
                            1 + trial % 2);
    model.params.Initialize(rng());
    testing::Scramble(rng, model.params, 0.5);
    auto a = testing::RandomOieInstance(rng, model.config.hidden_dim, kInventory.types, 5);
    auto b = testing::RandomOieInstance(rng, model.config.hidden_dim, kInventory.types, 5);
    std::vector<int> ta, tb;
    for (std::size_t i = 0; i < a.sentence.size(); ++i) ta.push_back(testing::Uniform(rng, 0, kTagCount - 1));
    for (std::size_t i = 0; i < b.sentence.size(); ++i) tb.push_back(testing::Uniform(rng, 0, kTagCount - 1));
    auto params = autodiff::Cast<double>(model.params);
    auto loss = [&] {
      auto one = [&](const testing::OieInstance &x, const std::vector<int> &tags) {
        auto out = OieForward(model, params, x.sentence, x.chunks, x.graph, x.verb);
        return OieLoss(ProjectToTokens(out.chunk_probs, x.chunks), tags);
      };
      return Add(one(a, ta), one(b, tb));
    };
    auto report = autodiff::GradCheck(params, loss);
    CAPTURE(trial);
    CAPTURE(report.worst_parameter);
    CAPTURE(report.max_relative_error);
    CHECK(report.passed);
  }
}

std::vector<TupleRecord> ToyRecords(int dim, std::vector<ChunkSequence> *chunks) {
  std::vector<TupleRecord> recs;
  for (auto &ex : GenerateToyCorpus()) {
    ex.sentence.embeddings = SyntheticEmbedding(ex.sentence, dim, 7);
    recs.push_back({ex.sentence, ex.tuples});
    chunks->push_back(ex.chunks);
  }
  return recs;
}

TEST_CASE("example construction") {
  std::vector<ChunkSequence> chunks;
  auto recs = ToyRecords(4, &chunks);
  OieExampleStats stats;
  auto ex = BuildOieExamples(recs, chunks, &stats);
  CHECK(ex.size() == recs.size());
  CHECK(stats.tags.expanded == 0);
  CHECK(stats.negative == 0);

  // A second verb without a tuple becomes an all-O example; a second tuple
  // for the same verb is dropped; the indicator is inferred from the REL.
  recs.resize(1);
  chunks.resize(1);
  auto &s = recs[0].sentence;
  s.tokens.back().is_verb = true;
  auto extra = recs[0].tuples[0];
  extra.verb.reset();
  recs[0].tuples.push_back(extra);
  ex = BuildOieExamples(recs, chunks, &stats);
  REQUIRE(ex.size() == 2);
  CHECK(stats.negative == 1);
  CHECK(stats.duplicate_verbs == 1);
  CHECK(ex[1].verb == static_cast<int>(s.size()) - 1);
  CHECK(std::all_of(ex[1].token_tags.begin(), ex[1].token_tags.end(), [](int t) { return t == 0; }));

  chunks[0].sentence_id = "other";
  CHECK_THROWS_AS(BuildOieExamples(recs, chunks), InputError);
  CHECK_THROWS_AS(BuildOieExamples(recs, {}), InputError);
}

TEST_CASE("projected distributions are identical within a chunk") {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    auto model = SmallModel(testing::Uniform(rng, 1, 8), testing::Uniform(rng, 1, 6));
    model.params.Initialize(rng());
    testing::Scramble(rng, model.params, 1.0);
    auto x = testing::RandomOieInstance(rng, model.config.hidden_dim, kInventory.types, 12);
    auto out = OieForward(model, model.params, x.sentence, x.chunks, x.graph, x.verb);
    auto tok = ProjectToTokens(out.chunk_probs, x.chunks);
    for (const auto &c : x.chunks.chunks) {
      for (int t = c.start + 1; t <= c.end; ++t) {
        CHECK(std::equal(tok.values().begin() + t * kTagCount, tok.values().begin() + (t + 1) * kTagCount,
                         tok.values().begin() + c.start * kTagCount));
      }
    }
  }
}

TEST_CASE("extract sentence runs once per verb") {
  Rng rng(9);
  auto model = SmallModel(4, 3);
  model.params.Initialize(3);
  testing::Scramble(rng, model.params, 2.0);
  auto x = testing::RandomOieInstance(rng, 4, kInventory.types, 8);
  for (auto &t : x.sentence.tokens) t.is_verb = false;
  CHECK(ExtractSentence(model, x.sentence, x.chunks, x.graph).empty());
  x.sentence.tokens.front().is_verb = true;
  x.sentence.tokens.back().is_verb = true;
  auto out = ExtractSentence(model, x.sentence, x.chunks, x.graph);
  CHECK(out.size() <= 2);
  CHECK(std::is_sorted(out.begin(), out.end(),
                       [](const auto &a, const auto &b) { return a.verb_index < b.verb_index; }));
}

TEST_CASE("extractor loss decreases over the first epochs on the toy corpus with defaults") {
  std::vector<ChunkSequence> chunks;
  auto recs = ToyRecords(768, &chunks);
  auto examples = BuildOieExamples(recs, chunks);
  TrainHistory history;
  TrainOie(examples, {}, ChunkInventory::Conll2000(), {.epochs = 5}, &history);
  REQUIRE(history.epoch_loss.size() == 5);
  for (int e = 1; e < 5; ++e) CHECK(history.epoch_loss[e] < history.epoch_loss[e - 1]);
}

TEST_CASE("extractor fits the toy corpus at small width; output is order-equivariant; checkpoints round trip") {
  std::vector<ChunkSequence> chunks;
  auto recs = ToyRecords(48, &chunks);
  auto examples = BuildOieExamples(recs, chunks);
  auto model = TrainOie(examples, {.hidden_dim = 48, .label_dim = 16}, ChunkInventory::Conll2000(),
                        {.seed = 5, .epochs = 400}, nullptr,
                        [&](int, double, const OieModel &m) { return TokenTagAccuracy(m, examples) < 0.99; });
  CHECK(TokenTagAccuracy(model, examples) >= 0.99);

  std::vector<std::vector<ExtractedTuple>> forward, backward;
  for (const auto &ex : examples) forward.push_back(ExtractSentence(model, ex.sentence, ex.chunks, ex.graph));
  for (auto it = examples.rbegin(); it != examples.rend(); ++it) {
    backward.push_back(ExtractSentence(model, it->sentence, it->chunks, it->graph));
  }
  std::reverse(backward.begin(), backward.end());
  CHECK(forward == backward);

  std::stringstream buf;
  SaveExtractor(buf, model);
  auto loaded = LoadExtractor(buf, "mem");
  CHECK(loaded.dep_labels == model.dep_labels);
  for (std::size_t i = 0; i < examples.size(); ++i) {
    CHECK(ExtractSentence(loaded, examples[i].sentence, examples[i].chunks, examples[i].graph) == forward[i]);
  }
}

}  // namespace
}  // namespace sacoie

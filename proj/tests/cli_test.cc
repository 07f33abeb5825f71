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

#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "pipeline.h"

namespace sacoie {
namespace {

using testing::Cli;
using testing::ReadFile;
using testing::SourcePath;

std::filesystem::path Scratch(const std::string &name) {
  auto dir = std::filesystem::temp_directory_path() / ("sacoie_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

const std::string kTuples = SourcePath("data/toy/toy.tuples.jsonl");

TEST_CASE("score on identical files prints perfect scores") {
  auto r = Cli({"score", "--scheme", "exact", "--pred", kTuples, "--gold", kTuples});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("P=100.0 R=100.0 F1=100.0") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto missing = Cli({"score", "--pred", "/no/such/file.jsonl", "--gold", kTuples});
  CHECK(missing.code == kExitInputError);
  CHECK(missing.err.find("/no/such/file.jsonl") != std::string::npos);
  CHECK(Cli({"score", "--pred", kTuples}).code == kExitInputError);
  CHECK(Cli({"frobnicate"}).code == kExitInputError);
  CHECK(Cli({"score", "--scheme", "rouge", "--pred", kTuples, "--gold", kTuples}).code ==
        kExitInputError);
  CHECK(Cli({"--workers", "0", "score", "--pred", kTuples, "--gold", kTuples}).code ==
        kExitInputError);
  CHECK(Cli({"--help"}).code == kExitOk);

  auto dir = Scratch("malformed");
  std::ofstream(dir / "bad.jsonl") << "{\"id\": \"x\"}\n";
  auto bad = Cli({"score", "--pred", (dir / "bad.jsonl").string(), "--gold", kTuples});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("bad.jsonl:1") != std::string::npos);
  // A checkpoint of the wrong kind is an input error too.
  auto wrong = Cli({"extract", "--model", kTuples, "--chunks", kTuples, "--in", kTuples, "--emb",
                    kTuples, "--out", (dir / "o.jsonl").string()});
  CHECK(wrong.code == kExitInputError);
}

TEST_CASE("config file, environment and command line") {
  auto dir = Scratch("config");
  const auto cfg = (dir / "run.ini").string();
  std::ofstream(cfg) << "# defaults\n[score]\nscheme = \"carb\"\nbinarize = true\n";
  auto r = Cli({"--config", cfg, "score", "--pred", kTuples, "--gold", kTuples});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("carb:", 0) == 0);
  r = Cli({"--config", cfg, "score", "--scheme", "benchie", "--pred", kTuples, "--gold", kTuples});
  CHECK(r.out.rfind("benchie:", 0) == 0);

  const auto extra = (dir / "extra.ini").string();
  std::ofstream(extra) << "[score]\nscheem = \"carb\"\n";
  CHECK(Cli({"--config", extra, "score", "--pred", kTuples, "--gold", kTuples}).code ==
        kExitInputError);

  setenv("SAC_OIE_SCHEME", "benchie", 1);
  r = Cli({"score", "--pred", kTuples, "--gold", kTuples});
  unsetenv("SAC_OIE_SCHEME");
  CHECK(r.out.rfind("benchie:", 0) == 0);
}

TEST_CASE("bundled toy files match the generator") {
  auto dir = Scratch("toy");
  REQUIRE(Cli({"convert", "toy", "--out-dir", dir.string()}).code == kExitOk);
  for (const char *name : {"toy.conllu", "toy.chunks.conll", "toy.tuples.jsonl"}) {
    CAPTURE(name);
    CHECK(ReadFile(dir / name) == ReadFile(SourcePath(std::string("data/toy/") + name)));
  }
}

TEST_CASE("convert round trips are byte-identical") {
  auto dir = Scratch("convert");
  const std::pair<const char *, const char *> files[] = {
      {"conllu", "toy.conllu"}, {"conll2000", "toy.chunks.conll"}, {"tuples", "toy.tuples.jsonl"}};
  for (auto [kind, name] : files) {
    const auto in = SourcePath(std::string("data/toy/") + name);
    const auto out = (dir / name).string();
    REQUIRE(Cli({"convert", kind, "--in", in, "--out", out}).code == kExitOk);
    CHECK(ReadFile(out) == ReadFile(in));
  }
}

TEST_CASE("alignment and dependency conversion on the toy corpus") {
  const auto chunks = SourcePath("data/toy/toy.chunks.conll");
  auto r = Cli({"analyze-alignment", "--chunks", chunks, "--gold", kTuples, "--format", "json"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("\"precision\"") != std::string::npos);

  auto dir = Scratch("dep");
  const auto out = (dir / "graphs.jsonl").string();
  r = Cli({"convert-dep", "--in", SourcePath("data/toy/toy.conllu"), "--chunks", chunks, "--out", out});
  REQUIRE(r.code == kExitOk);
  const auto text = ReadFile(out);
  CHECK(std::count(text.begin(), text.end(), '\n') == 50);
  CHECK(text.find("\"label\":\"root\"") != std::string::npos);
}

TEST_CASE("toy pipeline matches the golden report and is reproducible") {
  const auto base = std::filesystem::temp_directory_path() / "sacoie_cli_test_pipeline";
  auto first = testing::RunToyPipeline(base / "a");
  REQUIRE_MESSAGE(first.ok, first.failure);
  CHECK(first.report == ReadFile(SourcePath(testing::kGoldenReport)));

  auto second = testing::RunToyPipeline(base / "b");
  REQUIRE_MESSAGE(second.ok, second.failure);
  CHECK(first.tuples == second.tuples);
  CHECK(first.report == second.report);

  auto threaded = testing::RunToyPipeline(base / "c", 2);
  REQUIRE_MESSAGE(threaded.ok, threaded.failure);
  CHECK(first.tuples == threaded.tuples);
  CHECK(first.chunks == threaded.chunks);
}

}  // namespace
}  // namespace sacoie

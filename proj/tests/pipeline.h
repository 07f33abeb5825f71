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

// The bundled toy corpus run through the whole command line: synthetic
// embeddings, chunker and extractor training, chunking, extraction and
// scoring.

#ifndef SACOIE_TESTS_PIPELINE_H_
#define SACOIE_TESTS_PIPELINE_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sacoie/cli/cli.h"

namespace sacoie::testing {

inline std::string SourcePath(const std::string &relative) {
  return std::string(SACOIE_SOURCE_DIR) + "/" + relative;
}

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int code = 0;
  std::string out, err;
};

inline CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sac-oie");
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct PipelineResult {
  bool ok = true;
  std::string failure;  // first failing step and its stderr
  std::string tuples;   // extracted tuples
  std::string report;   // exact-match JSON report
  std::string chunks;   // predicted chunks
};

inline PipelineResult RunToyPipeline(const std::filesystem::path &dir, int workers = 1) {
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string d = dir.string() + "/";
  const std::string conllu = SourcePath("data/toy/toy.conllu");
  const std::string chunks = SourcePath("data/toy/toy.chunks.conll");
  const std::string tuples = SourcePath("data/toy/toy.tuples.jsonl");
  const std::vector<std::string> global = {"--seed", "11", "--workers", std::to_string(workers)};
  const std::vector<std::vector<std::string>> steps = {
      {"convert", "synth-embeddings", "--in", conllu, "--dim", "64", "--out", d + "toy.sace"},
      {"train-chunker", "--train", chunks, "--emb", d + "toy.sace", "--epochs", "200",
       "--target-f1", "1", "--out", d + "chunker.sack"},
      {"chunk", "--model", d + "chunker.sack", "--in", conllu, "--emb", d + "toy.sace", "--out",
       d + "pred.chunks.conll"},
      {"train-oie", "--tuples", tuples, "--chunks", chunks, "--emb", d + "toy.sace",
       "--label-dim", "16", "--epochs", "200", "--target-accuracy", "0.99", "--out",
       d + "oie.sack"},
      {"extract", "--model", d + "oie.sack", "--chunker", d + "chunker.sack", "--in", tuples,
       "--emb", d + "toy.sace", "--out", d + "pred.tuples.jsonl"},
      {"score", "--scheme", "exact", "--auc", "--pred", d + "pred.tuples.jsonl", "--gold", tuples,
       "--report", d + "report.json"},
  };
  PipelineResult result;
  for (const auto &step : steps) {
    auto args = global;
    args.insert(args.end(), step.begin(), step.end());
    auto run = Cli(args);
    if (run.code != 0) {
      result.ok = false;
      result.failure = step[0] + " exited " + std::to_string(run.code) + ": " + run.err;
      return result;
    }
  }
  result.tuples = ReadFile(d + "pred.tuples.jsonl");
  result.report = ReadFile(d + "report.json");
  result.chunks = ReadFile(d + "pred.chunks.conll");
  return result;
}

inline constexpr char kGoldenReport[] = "tests/data/golden/toy_pipeline_report.json";

}  // namespace sacoie::testing

#endif  // SACOIE_TESTS_PIPELINE_H_

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

#include "sacoie/cli/cli.h"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "sacoie/align/span_alignment.h"
#include "sacoie/chunker/chunk_metrics.h"
#include "sacoie/chunker/chunker.h"
#include "sacoie/data/toy_corpus.h"
#include "sacoie/eval/scorer.h"
#include "sacoie/graph/chunk_dep_graph.h"
#include "sacoie/io/conll2000.h"
#include "sacoie/io/conllu.h"
#include "sacoie/io/embeddings.h"
#include "sacoie/io/errors.h"
#include "sacoie/io/tuples_jsonl.h"
#include "sacoie/oie/extractor.h"

namespace sacoie {
namespace {

std::ifstream OpenIn(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

std::ofstream OpenOut(const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

void Close(std::ofstream &out, const std::string &path) {
  out.close();
  if (!out) throw InputError("error writing " + path);
}

bool EndsWith(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Sentences from a .conllu, a tuples .jsonl, or a CoNLL-2000 file.
std::vector<AnnotatedSentence> LoadSentences(const std::string &path, std::ostream &err) {
  auto in = OpenIn(path);
  std::vector<AnnotatedSentence> out;
  if (EndsWith(path, ".conllu")) return ParseConllu(in, path);
  if (EndsWith(path, ".jsonl")) {
    for (auto &rec : ParseTuples(in, path)) out.push_back(std::move(rec.sentence));
    return out;
  }
  std::vector<ParseWarning> warnings;
  for (auto &cs : ParseConll2000(in, &warnings, path)) out.push_back(std::move(cs.sentence));
  for (const auto &w : warnings) err << path << ":" << w.line << ": warning: " << w.message << '\n';
  return out;
}

std::vector<ChunkedSentence> LoadChunked(const std::string &path, std::ostream &err) {
  auto in = OpenIn(path);
  std::vector<ParseWarning> warnings;
  auto corpus = ParseConll2000(in, &warnings, path);
  for (const auto &w : warnings) err << path << ":" << w.line << ": warning: " << w.message << '\n';
  return corpus;
}

std::vector<TupleRecord> LoadTuples(const std::string &path) {
  auto in = OpenIn(path);
  return ParseTuples(in, path);
}

EmbeddingFile LoadEmbeddings(const std::string &path) {
  auto in = OpenIn(path);
  return ReadEmbeddings(in, path);
}

std::unordered_map<std::string, const ChunkSequence *> ById(std::span<const ChunkedSentence> corpus) {
  std::unordered_map<std::string, const ChunkSequence *> out;
  for (const auto &cs : corpus) {
    if (!out.emplace(cs.chunks.sentence_id, &cs.chunks).second) {
      throw InputError("duplicate chunk sequence for sentence " + cs.chunks.sentence_id);
    }
  }
  return out;
}

const ChunkSequence &Find(const std::unordered_map<std::string, const ChunkSequence *> &by_id,
                          const std::string &id) {
  auto it = by_id.find(id);
  if (it == by_id.end()) throw InputError("no chunks for sentence " + id);
  return *it->second;
}

ChunkInventory InventoryByName(const std::string &name) {
  if (name == "conll2000") return ChunkInventory::Conll2000();
  if (name == "oia-sp") return ChunkInventory::OiaSimplePhrase();
  throw InputError("unknown chunk inventory " + name);
}

// Runs fn(i) for i in [0, n) on the OpenMP team. The exception of the lowest
// failing index is rethrown.
template <typename Fn>
void ParallelFor(std::size_t n, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct TrainOptions {
  double learning_rate = 0.05;
  int batch_size = 16;
  int epochs = 20;
};

void AddTrainOptions(CLI::App *cmd, TrainOptions *t) {
  cmd->add_option("--lr", t->learning_rate, "SGD learning rate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--batch-size", t->batch_size, "Examples per SGD step")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--epochs", t->epochs, "Maximum number of epochs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

// Option values of every subcommand.
struct RunConfig {
  std::uint64_t seed = 1;
  int workers = 1;

  std::string in, out, gold, model, emb, chunks, chunker, tuples, report, out_dir;
  std::string inventory = "conll2000";
  std::string scheme = "exact";
  std::string format = "table";
  int dim = 768;
  int count = kToySentences;
  int hidden_dim = 0;  // 0: embedding width
  int label_dim = 400;
  int gcn_layers = 1;
  double alpha = 1.0;
  double target = 0.0;  // 0: train all epochs
  bool auc = false;
  bool binarize = false;
  TrainOptions train;

  TrainConfig ToTrainConfig() const {
    return {.seed = seed,
            .learning_rate = train.learning_rate,
            .batch_size = train.batch_size,
            .epochs = train.epochs};
  }
};

int EmbeddingWidth(const RunConfig &cfg, const EmbeddingFile &file) {
  if (cfg.hidden_dim != 0 && cfg.hidden_dim != static_cast<int>(file.dim)) {
    throw InputError("--hidden-dim " + std::to_string(cfg.hidden_dim) +
                     " does not match embedding width " + std::to_string(file.dim));
  }
  return static_cast<int>(file.dim);
}

// --- convert ---------------------------------------------------------------

void ConvertConll2000(const RunConfig &cfg, std::ostream &err) {
  auto corpus = LoadChunked(cfg.in, err);
  auto out = OpenOut(cfg.out);
  WriteConll2000(out, corpus);
  Close(out, cfg.out);
}

void ConvertConllu(const RunConfig &cfg) {
  auto in = OpenIn(cfg.in);
  auto corpus = ParseConllu(in, cfg.in);
  auto out = OpenOut(cfg.out);
  WriteConllu(out, corpus);
  Close(out, cfg.out);
}

void ConvertTuples(const RunConfig &cfg) {
  auto records = LoadTuples(cfg.in);
  auto out = OpenOut(cfg.out);
  WriteTuples(out, records);
  Close(out, cfg.out);
}

void ConvertSynthEmbeddings(const RunConfig &cfg, std::ostream &err) {
  auto sentences = LoadSentences(cfg.in, err);
  auto matrices = SyntheticEmbeddings(sentences, cfg.dim, cfg.seed);
  if (matrices.size() != sentences.size()) throw InputError(cfg.in + ": duplicate sentence ids");
  auto out = OpenOut(cfg.out);
  WriteEmbeddings(out, static_cast<std::uint32_t>(cfg.dim), matrices);
  Close(out, cfg.out);
}

void ConvertToy(const RunConfig &cfg) {
  auto toy = GenerateToyCorpus(cfg.seed, cfg.count);
  std::vector<AnnotatedSentence> sentences;
  std::vector<ChunkedSentence> chunked;
  std::vector<TupleRecord> records;
  for (const auto &ex : toy) {
    sentences.push_back(ex.sentence);
    chunked.push_back({ex.sentence, ex.chunks});
    records.push_back({ex.sentence, ex.tuples});
  }
  std::filesystem::create_directories(cfg.out_dir);
  const std::string dir = cfg.out_dir + "/";
  auto conllu = OpenOut(dir + "toy.conllu");
  WriteConllu(conllu, sentences);
  Close(conllu, dir + "toy.conllu");
  auto chunks = OpenOut(dir + "toy.chunks.conll");
  WriteConll2000(chunks, chunked);
  Close(chunks, dir + "toy.chunks.conll");
  auto tuples = OpenOut(dir + "toy.tuples.jsonl");
  WriteTuples(tuples, records);
  Close(tuples, dir + "toy.tuples.jsonl");
}

// --- chunk / alignment / graphs ----------------------------------------------

void Join(std::vector<AnnotatedSentence> &sentences, const EmbeddingFile &file) {
  JoinEmbeddings(sentences, file);
}

void RunChunk(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  auto model_in = OpenIn(cfg.model);
  const auto model = LoadChunker(model_in, cfg.model);
  auto sentences = LoadSentences(cfg.in, err);
  Join(sentences, LoadEmbeddings(cfg.emb));
  std::vector<ChunkedSentence> result(sentences.size());
  ParallelFor(sentences.size(), [&](std::size_t i) {
    result[i] = {sentences[i], Chunk(model, sentences[i])};
    result[i].sentence.embeddings.reset();
  });
  auto file = OpenOut(cfg.out);
  WriteConll2000(file, result);
  Close(file, cfg.out);

  if (!cfg.gold.empty()) {
    const auto gold = LoadChunked(cfg.gold, err);
    const auto by_id = ById(gold);
    std::vector<ChunkSequence> pred, ref;
    for (const auto &r : result) {
      pred.push_back(r.chunks);
      ref.push_back(Find(by_id, r.chunks.sentence_id));
    }
    const auto metrics = ChunkMetricsToJson(EvaluateChunks(pred, ref));
    if (cfg.report.empty()) {
      out << metrics.dump(2) << '\n';
    } else {
      auto rep = OpenOut(cfg.report);
      rep << metrics.dump(2) << '\n';
      Close(rep, cfg.report);
    }
  }
}

void RunAlignment(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto chunks = LoadChunked(cfg.chunks, err);
  const auto by_id = ById(chunks);
  std::vector<AlignmentInput> inputs;
  for (const auto &rec : LoadTuples(cfg.gold)) {
    AlignmentInput in{Find(by_id, rec.sentence.id), {}};
    for (const auto &e : rec.tuples) in.gold.push_back(e.tuple);
    inputs.push_back(std::move(in));
  }
  const auto result = AggregateAlignment(inputs);
  if (cfg.format == "json") {
    out << AlignmentToJson(result) << '\n';
  } else {
    out << RenderAlignmentTable(result);
  }
}

void RunConvertDep(const RunConfig &cfg, std::ostream &err) {
  const auto sentences = LoadSentences(cfg.in, err);
  const auto chunks = LoadChunked(cfg.chunks, err);
  const auto by_id = ById(chunks);
  auto file = OpenOut(cfg.out);
  for (const auto &s : sentences) {
    const auto &cs = Find(by_id, s.id);
    auto violations = ValidateChunkSequence(cs, static_cast<int>(s.size()));
    if (!violations.empty()) throw InputError("sentence " + s.id + ": " + violations.front());
    file << ChunkGraphToJson(ToChunkGraph(s, cs), s, cs) << '\n';
  }
  Close(file, cfg.out);
}

// --- training ------------------------------------------------------------------

void RunTrainChunker(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  auto corpus = LoadChunked(cfg.in, err);
  const auto emb = LoadEmbeddings(cfg.emb);
  std::vector<AnnotatedSentence> sentences;
  for (auto &cs : corpus) sentences.push_back(std::move(cs.sentence));
  Join(sentences, emb);
  for (std::size_t i = 0; i < corpus.size(); ++i) corpus[i].sentence = std::move(sentences[i]);

  ChunkerConfig config{.hidden_dim = EmbeddingWidth(cfg, emb), .alpha = cfg.alpha};
  TrainHistory history;
  auto model = TrainChunker(corpus, config, InventoryByName(cfg.inventory), cfg.ToTrainConfig(),
                            &history, [&](int epoch, double loss, const ChunkerModel &m) {
                              err << "epoch " << epoch << " loss " << loss << '\n';
                              if (cfg.target <= 0) return true;
                              const double f1 = EvaluateChunker(m, corpus).boundary.F1();
                              return f1 < cfg.target;
                            });
  auto file = OpenOut(cfg.out);
  SaveChunker(file, model);
  Close(file, cfg.out);
  const auto metrics = EvaluateChunker(model, corpus);
  out << "epochs " << history.epoch_loss.size() << " boundary-F1 "
      << 100 * metrics.boundary.F1() << " typed-F1 " << 100 * metrics.typed.F1() << '\n';
}

// Chunk sequences in the order of `records`.
std::vector<ChunkSequence> AlignedChunks(std::span<const TupleRecord> records,
                                         std::span<const ChunkedSentence> chunks) {
  const auto by_id = ById(chunks);
  std::vector<ChunkSequence> out;
  for (const auto &rec : records) out.push_back(Find(by_id, rec.sentence.id));
  return out;
}

void RunTrainOie(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  auto records = LoadTuples(cfg.tuples);
  const auto emb = LoadEmbeddings(cfg.emb);
  std::vector<AnnotatedSentence> sentences;
  for (auto &r : records) sentences.push_back(std::move(r.sentence));
  Join(sentences, emb);
  for (std::size_t i = 0; i < records.size(); ++i) records[i].sentence = std::move(sentences[i]);
  const auto chunks = AlignedChunks(records, LoadChunked(cfg.chunks, err));

  OieExampleStats stats;
  const auto examples = BuildOieExamples(records, chunks, &stats);
  err << "examples " << examples.size() << " negative " << stats.negative << " expanded "
      << stats.tags.expanded << " conflicts " << stats.tags.conflicts << " dropped "
      << stats.duplicate_verbs << '\n';
  OieConfig config{.hidden_dim = EmbeddingWidth(cfg, emb),
                   .label_dim = cfg.label_dim,
                   .gcn_layers = cfg.gcn_layers};
  TrainHistory history;
  auto model = TrainOie(examples, config, InventoryByName(cfg.inventory), cfg.ToTrainConfig(),
                        &history, [&](int epoch, double loss, const OieModel &m) {
                          err << "epoch " << epoch << " loss " << loss << '\n';
                          if (cfg.target <= 0) return true;
                          return TokenTagAccuracy(m, examples) < cfg.target;
                        });
  auto file = OpenOut(cfg.out);
  SaveExtractor(file, model);
  Close(file, cfg.out);
  out << "epochs " << history.epoch_loss.size() << " token-accuracy "
      << 100 * TokenTagAccuracy(model, examples) << '\n';
}

// --- extract / score --------------------------------------------------------

void RunExtract(const RunConfig &cfg, std::ostream &err) {
  if (cfg.chunker.empty() == cfg.chunks.empty()) {
    throw InputError("extract needs exactly one of --chunker and --chunks");
  }
  auto model_in = OpenIn(cfg.model);
  const auto model = LoadExtractor(model_in, cfg.model);
  auto sentences = LoadSentences(cfg.in, err);
  Join(sentences, LoadEmbeddings(cfg.emb));

  std::vector<ChunkSequence> chunks(sentences.size());
  if (!cfg.chunker.empty()) {
    auto chunker_in = OpenIn(cfg.chunker);
    const auto chunker = LoadChunker(chunker_in, cfg.chunker);
    ParallelFor(sentences.size(), [&](std::size_t i) { chunks[i] = Chunk(chunker, sentences[i]); });
  } else {
    const auto gold = LoadChunked(cfg.chunks, err);
    const auto by_id = ById(gold);
    for (std::size_t i = 0; i < sentences.size(); ++i) chunks[i] = Find(by_id, sentences[i].id);
  }

  std::vector<TupleRecord> records(sentences.size());
  ParallelFor(sentences.size(), [&](std::size_t i) {
    const auto &s = sentences[i];
    auto violations = ValidateChunkSequence(chunks[i], static_cast<int>(s.size()));
    if (!violations.empty()) throw InputError("sentence " + s.id + ": " + violations.front());
    const auto graph = ToChunkGraph(s, chunks[i]);
    records[i].sentence = s;
    records[i].sentence.embeddings.reset();
    for (const auto &t : ExtractSentence(model, s, chunks[i], graph)) {
      records[i].tuples.push_back({ToTokenTuple(t), t.confidence, t.verb_index, std::nullopt});
    }
  });
  auto file = OpenOut(cfg.out);
  WriteTuples(file, records);
  Close(file, cfg.out);
}

void RunScore(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const auto scheme = ParseScheme(cfg.scheme);
  if (!scheme) throw InputError("unknown scheme " + cfg.scheme);
  const auto pred = LoadTuples(cfg.in);
  const auto gold = LoadTuples(cfg.gold);
  const auto report = Score(*scheme, pred, gold, {.auc = cfg.auc, .binarize = cfg.binarize});
  for (const auto &w : report.warnings) err << "warning: " << w << '\n';
  if (!cfg.report.empty()) {
    auto file = OpenOut(cfg.report);
    file << ScoreReportToJson(report) << '\n';
    Close(file, cfg.report);
  }
  if (cfg.format == "json") {
    out << ScoreReportToJson(report) << '\n';
  } else {
    out << ScoreReportTable(report) << '\n';
  }
}

// --- wiring -----------------------------------------------------------------

std::string EnvName(const std::string &option) {
  std::string name = "SAC_OIE_";
  for (char c : option) {
    if (c == '-') {
      if (name.back() != '_') name += '_';
    } else {
      name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return name;
}

// Attaches SAC_OIE_* variables and strict config handling to every option.
void Finish(CLI::App *app) {
  app->allow_config_extras(CLI::config_extras_mode::error);
  for (auto *opt : app->get_options()) {
    const auto &names = opt->get_lnames();
    if (names.empty() || names.front() == "help" || names.front() == "config") continue;
    opt->envname(EnvName(names.front()));
  }
  for (auto *sub : app->get_subcommands({})) Finish(sub);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Chunk-level open information extraction", "sac-oie"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Configuration file: key = value lines, [subcommand] sections");
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads for per-sentence work")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::function<void()> action;
  auto on = [&](CLI::App *cmd, std::function<void()> fn) {
    cmd->callback([&action, fn] { action = fn; });
  };
  auto in_file = [&](CLI::App *cmd, const std::string &flag, std::string *dst,
                     const std::string &help, bool required = true) {
    auto *opt = cmd->add_option(flag, *dst, help);
    if (required) opt->required();
    return opt;
  };

  auto *convert = app.add_subcommand("convert", "Normalize corpus files or create inputs");
  convert->require_subcommand(1);
  auto *c2000 = convert->add_subcommand("conll2000", "Rewrite a CoNLL-2000 chunk file");
  in_file(c2000, "--in", &cfg.in, "Input file");
  in_file(c2000, "--out", &cfg.out, "Output file");
  on(c2000, [&] { ConvertConll2000(cfg, err); });
  auto *cu = convert->add_subcommand("conllu", "Rewrite a CoNLL-U file");
  in_file(cu, "--in", &cfg.in, "Input file");
  in_file(cu, "--out", &cfg.out, "Output file");
  on(cu, [&] { ConvertConllu(cfg); });
  auto *ct = convert->add_subcommand("tuples", "Rewrite a tuples JSON Lines file");
  in_file(ct, "--in", &cfg.in, "Input file");
  in_file(ct, "--out", &cfg.out, "Output file");
  on(ct, [&] { ConvertTuples(cfg); });
  auto *cs = convert->add_subcommand("synth-embeddings", "Write deterministic synthetic embeddings");
  in_file(cs, "--in", &cfg.in, "Sentences (.conllu, .jsonl or CoNLL-2000)");
  in_file(cs, "--out", &cfg.out, "Embedding file");
  cs->add_option("--dim", cfg.dim, "Vector width")->capture_default_str()->check(CLI::PositiveNumber);
  on(cs, [&] { ConvertSynthEmbeddings(cfg, err); });
  auto *toy = convert->add_subcommand("toy", "Write the rule-generated toy corpus");
  in_file(toy, "--out-dir", &cfg.out_dir, "Output directory");
  toy->add_option("--count", cfg.count, "Sentences")->capture_default_str()->check(CLI::PositiveNumber);
  toy->callback([&] {
    // The toy corpus has its own default seed.
    if (app.get_option("--seed")->count() == 0 && std::getenv("SAC_OIE_SEED") == nullptr) cfg.seed = kToySeed;
    action = [&] { ConvertToy(cfg); };
  });

  auto *chunk = app.add_subcommand("chunk", "Chunk sentences with a trained chunker");
  in_file(chunk, "--model", &cfg.model, "Chunker checkpoint");
  in_file(chunk, "--in", &cfg.in, "Sentences (.conllu, .jsonl or CoNLL-2000)");
  in_file(chunk, "--emb", &cfg.emb, "Embedding file");
  in_file(chunk, "--out", &cfg.out, "Output CoNLL-2000 file");
  in_file(chunk, "--gold", &cfg.gold, "Reference chunks to score against", false);
  in_file(chunk, "--report", &cfg.report, "Write chunk metrics here instead of stdout", false);
  on(chunk, [&] { RunChunk(cfg, out, err); });

  auto *align = app.add_subcommand("analyze-alignment", "Chunk / tuple-span boundary alignment");
  in_file(align, "--chunks", &cfg.chunks, "CoNLL-2000 chunks");
  in_file(align, "--gold", &cfg.gold, "Reference tuples (.jsonl)");
  align->add_option("--format", cfg.format, "table or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "json"}));
  on(align, [&] { RunAlignment(cfg, out, err); });

  auto *dep = app.add_subcommand("convert-dep", "Lift token dependencies to chunk graphs");
  in_file(dep, "--in", &cfg.in, "Parsed sentences (.conllu or .jsonl)");
  in_file(dep, "--chunks", &cfg.chunks, "CoNLL-2000 chunks");
  in_file(dep, "--out", &cfg.out, "Output JSON Lines");
  on(dep, [&] { RunConvertDep(cfg, err); });

  auto *tc = app.add_subcommand("train-chunker", "Train the chunker");
  in_file(tc, "--train", &cfg.in, "CoNLL-2000 training chunks");
  in_file(tc, "--emb", &cfg.emb, "Embedding file");
  in_file(tc, "--out", &cfg.out, "Checkpoint to write");
  tc->add_option("--inventory", cfg.inventory, "conll2000 or oia-sp")->capture_default_str();
  tc->add_option("--hidden-dim", cfg.hidden_dim, "Must equal the embedding width")
      ->check(CLI::PositiveNumber);
  tc->add_option("--alpha", cfg.alpha, "Type loss weight")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  tc->add_option("--target-f1", cfg.target, "Stop once training boundary F1 reaches this (0-1)")
      ->check(CLI::Range(0.0, 1.0));
  AddTrainOptions(tc, &cfg.train);
  on(tc, [&] { RunTrainChunker(cfg, out, err); });

  auto *to = app.add_subcommand("train-oie", "Train the tuple extractor");
  in_file(to, "--tuples", &cfg.tuples, "Reference tuples (.jsonl)");
  in_file(to, "--chunks", &cfg.chunks, "CoNLL-2000 chunks of the same sentences");
  in_file(to, "--emb", &cfg.emb, "Embedding file");
  in_file(to, "--out", &cfg.out, "Checkpoint to write");
  to->add_option("--inventory", cfg.inventory, "conll2000 or oia-sp")->capture_default_str();
  to->add_option("--hidden-dim", cfg.hidden_dim, "Must equal the embedding width")
      ->check(CLI::PositiveNumber);
  to->add_option("--label-dim", cfg.label_dim, "Dependency label width")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  to->add_option("--gcn-layers", cfg.gcn_layers, "Graph layers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  to->add_option("--target-accuracy", cfg.target, "Stop once token tag accuracy reaches this (0-1)")
      ->check(CLI::Range(0.0, 1.0));
  AddTrainOptions(to, &cfg.train);
  on(to, [&] { RunTrainOie(cfg, out, err); });

  auto *ex = app.add_subcommand("extract", "Extract tuples");
  in_file(ex, "--model", &cfg.model, "Extractor checkpoint");
  in_file(ex, "--in", &cfg.in, "Sentences with verbs and arcs (.conllu or .jsonl)");
  in_file(ex, "--emb", &cfg.emb, "Embedding file");
  in_file(ex, "--chunker", &cfg.chunker, "Chunker checkpoint", false);
  in_file(ex, "--chunks", &cfg.chunks, "Precomputed CoNLL-2000 chunks", false);
  in_file(ex, "--out", &cfg.out, "Output tuples (.jsonl)");
  on(ex, [&] { RunExtract(cfg, err); });

  auto *sc = app.add_subcommand("score", "Score predicted tuples");
  sc->add_option("--scheme", cfg.scheme, "exact, carb or benchie")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "carb", "benchie"}));
  in_file(sc, "--pred", &cfg.in, "Predicted tuples (.jsonl)");
  in_file(sc, "--gold", &cfg.gold, "Reference tuples (.jsonl)");
  sc->add_flag("--auc", cfg.auc, "Also compute the precision-recall curve");
  sc->add_flag("--binarize", cfg.binarize, "carb: fold trailing arguments into the object");
  in_file(sc, "--report", &cfg.report, "Write the JSON report here", false);
  sc->add_option("--format", cfg.format, "stdout format: table or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"table", "json"}));
  on(sc, [&] { RunScore(cfg, out, err); });

  Finish(&app);

  std::vector<std::string> argv_store = args;
  if (argv_store.empty()) argv_store.push_back("sac-oie");
  std::vector<char *> argv;
  for (auto &a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const int previous_threads = omp_get_max_threads();
  omp_set_num_threads(cfg.workers);
  int code = kExitOk;
  try {
    action();
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    code = kExitInputError;
  } catch (const std::filesystem::filesystem_error &e) {
    err << "error: " << e.what() << '\n';
    code = kExitInputError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitInternalError;
  }
  omp_set_num_threads(previous_threads);
  return code;
}

}  // namespace sacoie

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

// Serial vs OpenMP kernels, corpus-level alignment, and end-to-end model
// passes at full width. Run with OMP_NUM_THREADS set to compare.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sacoie/align/span_alignment.h"
#include "sacoie/chunker/chunker.h"
#include "sacoie/data/toy_corpus.h"
#include "sacoie/graph/chunk_dep_graph.h"
#include "sacoie/oie/extractor.h"
#include "sacoie/tensor/kernels.h"

namespace sacoie {
namespace {

std::vector<float> Random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> d;
  std::vector<float> v(n);
  for (auto &x : v) x = d(rng);
  return v;
}

template <bool kParallel>
void BM_MatMul(benchmark::State &state) {
  const std::size_t m = state.range(0), k = state.range(1), n = state.range(2);
  auto a = Random(m * k, 1), b = Random(k * n, 2);
  std::vector<float> c(m * n);
  for (auto _ : state) {
    if (kParallel) {
      kernels::parallel::MatMul(a.data(), b.data(), c.data(), m, k, n, false);
    } else {
      kernels::serial::MatMul(a.data(), b.data(), c.data(), m, k, n, false);
    }
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * m * k * n);
}
BENCHMARK(BM_MatMul<false>)->Args({32, 768, 768})->Args({64, 768, 15})->Args({128, 1536, 400});
BENCHMARK(BM_MatMul<true>)->Args({32, 768, 768})->Args({64, 768, 15})->Args({128, 1536, 400});

template <bool kParallel>
void BM_MatMulTransB(benchmark::State &state) {
  const std::size_t m = state.range(0), k = state.range(1);
  auto a = Random(m * k, 3);
  std::vector<float> c(m * m);
  for (auto _ : state) {
    if (kParallel) {
      kernels::parallel::MatMulTransB(a.data(), a.data(), c.data(), m, k, m, false);
    } else {
      kernels::serial::MatMulTransB(a.data(), a.data(), c.data(), m, k, m, false);
    }
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_MatMulTransB<false>)->Args({32, 1168})->Args({256, 1168});
BENCHMARK(BM_MatMulTransB<true>)->Args({32, 1168})->Args({256, 1168});

template <bool kParallel>
void BM_Softmax(benchmark::State &state) {
  const std::size_t rows = state.range(0), cols = state.range(1);
  auto x = Random(rows * cols, 4);
  std::vector<float> y(x.size());
  for (auto _ : state) {
    if (kParallel) {
      kernels::parallel::SoftmaxRows(x.data(), y.data(), rows, cols, nullptr);
    } else {
      kernels::serial::SoftmaxRows(x.data(), y.data(), rows, cols, nullptr);
    }
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_Softmax<false>)->Args({4096, 15})->Args({512, 512});
BENCHMARK(BM_Softmax<true>)->Args({4096, 15})->Args({512, 512});

std::vector<AlignmentInput> AlignmentCorpus(int sentences) {
  std::mt19937_64 rng(5);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<AlignmentInput> corpus;
  for (int i = 0; i < sentences; ++i) {
    AlignmentInput in;
    const int n = uniform(5, 40);
    for (int t = 0; t < n;) {
      const int len = std::min(n - t, uniform(1, 4));
      in.chunks.chunks.push_back({t, t + len - 1, "NP"});
      t += len;
    }
    for (int k = uniform(1, 3); k > 0; --k) {
      GoldTuple g;
      for (int s = 0; s < 3; ++s) {
        int a = uniform(0, n - 1), b = uniform(0, n - 1);
        if (a > b) std::swap(a, b);
        std::vector<int> v;
        for (int t = a; t <= b; ++t) v.push_back(t);
        if (s == 0) {
          g.relation = v;
        } else {
          g.arguments.push_back(v);
        }
      }
      in.gold.push_back(std::move(g));
    }
    corpus.push_back(std::move(in));
  }
  return corpus;
}

void BM_AlignmentSerial(benchmark::State &state) {
  const auto corpus = AlignmentCorpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AggregateAlignmentSerial(corpus));
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
void BM_AlignmentParallel(benchmark::State &state) {
  const auto corpus = AlignmentCorpus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(AggregateAlignment(corpus));
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_AlignmentSerial)->Arg(10000);
BENCHMARK(BM_AlignmentParallel)->Arg(10000);

void BM_ChunkSentence(benchmark::State &state) {
  auto toy = GenerateToyCorpus();
  auto &s = toy.front().sentence;
  s.embeddings = SyntheticEmbedding(s, 768, 7);
  ChunkerModel model({}, ChunkInventory::Conll2000(), {"DT", "NN", "VB"});
  model.params.Initialize(1);
  for (auto _ : state) benchmark::DoNotOptimize(Chunk(model, s));
}
BENCHMARK(BM_ChunkSentence);

void BM_ExtractSentence(benchmark::State &state) {
  auto toy = GenerateToyCorpus();
  auto &ex = toy.front();
  ex.sentence.embeddings = SyntheticEmbedding(ex.sentence, 768, 7);
  const auto graph = ToChunkGraph(ex.sentence, ex.chunks);
  OieModel model({}, ChunkInventory::Conll2000(), {"det", "dobj", "nsubj", "root"});
  model.params.Initialize(1);
  for (auto _ : state) benchmark::DoNotOptimize(ExtractSentence(model, ex.sentence, ex.chunks, graph));
}
BENCHMARK(BM_ExtractSentence);

}  // namespace
}  // namespace sacoie

BENCHMARK_MAIN();

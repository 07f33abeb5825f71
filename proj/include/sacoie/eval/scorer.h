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

// Tuple-level scoring of predicted extractions against reference tuples.
//
//   exact    a prediction is correct when its relation and ordered argument
//            token sets equal those of an unused reference tuple.
//   carb     binary tuples (subject, relation, object) earn partial credit
//            from slot-wise token overlap; pairs are assigned one-to-one,
//            greedily by descending pair F1.
//   benchie  references are grouped into fact synsets (the "synset" key);
//            a prediction is correct when it equals any fact of its
//            sentence, and a synset is recalled when any member is matched.
//
// Predictions and references are matched by sentence id; both files must
// list the same sentences. Within a sentence predictions are put in a
// canonical order first, so results do not depend on file order.

#ifndef SACOIE_EVAL_SCORER_H_
#define SACOIE_EVAL_SCORER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sacoie/core/types.h"
#include "sacoie/io/tuples_jsonl.h"

namespace sacoie {

enum class Scheme { kExact, kCarb, kBenchie };

std::string_view SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(std::string_view name);

struct SentenceScore {
  std::string id;
  int predicted = 0;
  // Reference tuples, or synsets for benchie.
  int gold = 0;
  double precision_credit = 0.0;
  double recall_credit = 0.0;
};

struct PrPoint {
  double threshold = 0.0;
  double precision = 0.0;
  double recall = 0.0;

  bool operator==(const PrPoint &) const = default;
};

struct ScoreReport {
  Scheme scheme = Scheme::kExact;
  int sentences = 0;
  int predicted = 0;
  int gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> auc;
  // Sorted by recall; the area also counts a leading (0, P_first) point.
  std::vector<PrPoint> curve;
  std::vector<SentenceScore> per_sentence;
  std::vector<std::string> warnings;
};

struct ScoreOptions {
  bool auc = false;
  // carb only: fold arguments after the first into the object slot.
  bool binarize = false;
  // carb: sentences with more predictions than this get a warning, since the
  // greedy assignment may then differ from an optimal one.
  int greedy_warning_limit = 50;
};

double F1(double precision, double recall);

struct PairScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Slot-wise overlap of two binary tuples. Throws InputError unless both have
// exactly two arguments.
PairScore CarbPairScore(const GoldTuple &pred, const GoldTuple &gold);

// Subject = first argument, object = union of the rest (possibly empty).
GoldTuple Binarize(const GoldTuple &tuple);

// Throws InputError on a sentence-id mismatch or duplicate ids, on a
// non-binary carb tuple, and when auc is requested but a prediction lacks a
// confidence.
ScoreReport Score(Scheme scheme, std::span<const TupleRecord> pred,
                  std::span<const TupleRecord> gold, const ScoreOptions &options = {});

ScoreReport ExactMatchScore(std::span<const TupleRecord> pred,
                            std::span<const TupleRecord> gold,
                            const ScoreOptions &options = {});
ScoreReport CarbTokenScore(std::span<const TupleRecord> pred,
                           std::span<const TupleRecord> gold,
                           const ScoreOptions &options = {});
ScoreReport BenchieScore(std::span<const TupleRecord> pred,
                         std::span<const TupleRecord> synsets,
                         const ScoreOptions &options = {});

// Trapezoidal area under a recall-sorted curve, starting from
// (0, curve[0].precision). An empty curve has area 0.
double CurveArea(std::span<const PrPoint> curve);

// Metrics as percentages with two decimals.
std::string ScoreReportToJson(const ScoreReport &report);
// One summary line.
std::string ScoreReportTable(const ScoreReport &report);

}  // namespace sacoie

#endif  // SACOIE_EVAL_SCORER_H_

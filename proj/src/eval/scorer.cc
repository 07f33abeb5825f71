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

#include "sacoie/eval/scorer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "sacoie/io/errors.h"

namespace sacoie {
namespace {

struct Scored {
  const TupleEntry *entry;
  GoldTuple tuple;
};

// Canonical order: indicator, then tuple, then confidence (high first).
std::vector<Scored> Canonical(const TupleRecord &rec, bool binarize) {
  std::vector<Scored> out;
  for (const auto &e : rec.tuples) out.push_back({&e, binarize ? Binarize(e.tuple) : e.tuple});
  std::sort(out.begin(), out.end(), [](const Scored &a, const Scored &b) {
    const int va = a.entry->verb.value_or(-1), vb = b.entry->verb.value_or(-1);
    if (va != vb) return va < vb;
    if (a.tuple != b.tuple) return a.tuple < b.tuple;
    return a.entry->confidence.value_or(0.0) > b.entry->confidence.value_or(0.0);
  });
  return out;
}

int Overlap(const std::vector<int> &a, const std::vector<int> &b) {
  int n = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n, ++i, ++j;
    }
  }
  return n;
}

struct SentenceInput {
  const TupleRecord *gold;
  std::vector<Scored> pred;
  std::vector<Scored> ref;
  std::vector<int> synset;  // benchie: dense synset index per reference
  int synsets = 0;
};

void RequireBinary(const GoldTuple &t, const std::string &id) {
  if (t.arguments.size() != 2) {
    throw InputError("sentence " + id + ": carb needs binary tuples, got " +
                     std::to_string(t.arguments.size()) + " arguments");
  }
}

SentenceScore ScoreSentence(Scheme scheme, const SentenceInput &in, double min_conf,
                            bool filter) {
  SentenceScore s;
  s.id = in.gold->sentence.id;
  std::vector<const GoldTuple *> pred;
  for (const auto &p : in.pred) {
    if (!filter || p.entry->confidence.value_or(0.0) >= min_conf) pred.push_back(&p.tuple);
  }
  s.predicted = static_cast<int>(pred.size());
  switch (scheme) {
    case Scheme::kExact: {
      s.gold = static_cast<int>(in.ref.size());
      std::vector<bool> used(in.ref.size(), false);
      for (const auto *p : pred) {
        for (std::size_t g = 0; g < in.ref.size(); ++g) {
          if (!used[g] && in.ref[g].tuple == *p) {
            used[g] = true;
            s.precision_credit += 1;
            s.recall_credit += 1;
            break;
          }
        }
      }
      break;
    }
    case Scheme::kCarb: {
      s.gold = static_cast<int>(in.ref.size());
      struct Pair {
        PairScore score;
        std::size_t p, g;
      };
      std::vector<Pair> pairs;
      for (std::size_t p = 0; p < pred.size(); ++p) {
        for (std::size_t g = 0; g < in.ref.size(); ++g) {
          auto score = CarbPairScore(*pred[p], in.ref[g].tuple);
          if (score.f1 > 0) pairs.push_back({score, p, g});
        }
      }
      std::stable_sort(pairs.begin(), pairs.end(),
                       [](const Pair &a, const Pair &b) { return a.score.f1 > b.score.f1; });
      std::vector<bool> pu(pred.size(), false), gu(in.ref.size(), false);
      for (const auto &pair : pairs) {
        if (pu[pair.p] || gu[pair.g]) continue;
        pu[pair.p] = gu[pair.g] = true;
        s.precision_credit += pair.score.precision;
        s.recall_credit += pair.score.recall;
      }
      break;
    }
    case Scheme::kBenchie: {
      s.gold = in.synsets;
      std::vector<bool> covered(in.synsets, false);
      for (const auto *p : pred) {
        bool correct = false;
        for (std::size_t g = 0; g < in.ref.size(); ++g) {
          if (in.ref[g].tuple == *p) {
            correct = true;
            covered[in.synset[g]] = true;
          }
        }
        if (correct) s.precision_credit += 1;
      }
      s.recall_credit = static_cast<double>(std::count(covered.begin(), covered.end(), true));
      break;
    }
  }
  return s;
}

struct Totals {
  int predicted = 0, gold = 0;
  double precision_credit = 0, recall_credit = 0;
  double precision() const { return predicted ? precision_credit / predicted : 0.0; }
  double recall() const { return gold ? recall_credit / gold : 0.0; }
};

// Scores every sentence; per-sentence work is independent and the reduction
// runs serially in sentence order.
Totals ScoreAll(Scheme scheme, const std::vector<SentenceInput> &inputs, double min_conf,
                bool filter, std::vector<SentenceScore> *per_sentence) {
  std::vector<SentenceScore> scores(inputs.size());
  const long n = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) scores[i] = ScoreSentence(scheme, inputs[i], min_conf, filter);
  Totals t;
  for (const auto &s : scores) {
    t.predicted += s.predicted;
    t.gold += s.gold;
    t.precision_credit += s.precision_credit;
    t.recall_credit += s.recall_credit;
  }
  if (per_sentence != nullptr) *per_sentence = std::move(scores);
  return t;
}

double Round(double v, double scale) { return std::round(v * scale) / scale; }

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kExact:
      return "exact";
    case Scheme::kCarb:
      return "carb";
    case Scheme::kBenchie:
      return "benchie";
  }
  return "?";
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  for (auto s : {Scheme::kExact, Scheme::kCarb, Scheme::kBenchie}) {
    if (SchemeName(s) == name) return s;
  }
  return std::nullopt;
}

double F1(double precision, double recall) {
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
}

PairScore CarbPairScore(const GoldTuple &pred, const GoldTuple &gold) {
  RequireBinary(pred, "<pred>");
  RequireBinary(gold, "<gold>");
  const std::vector<int> *ps[] = {&pred.arguments[0], &pred.relation, &pred.arguments[1]};
  const std::vector<int> *gs[] = {&gold.arguments[0], &gold.relation, &gold.arguments[1]};
  int matched = 0, np = 0, ng = 0;
  for (int slot = 0; slot < 3; ++slot) {
    matched += Overlap(*ps[slot], *gs[slot]);
    np += static_cast<int>(ps[slot]->size());
    ng += static_cast<int>(gs[slot]->size());
  }
  PairScore s;
  s.precision = np ? static_cast<double>(matched) / np : 0.0;
  s.recall = ng ? static_cast<double>(matched) / ng : 0.0;
  s.f1 = F1(s.precision, s.recall);
  return s;
}

GoldTuple Binarize(const GoldTuple &tuple) {
  GoldTuple out;
  out.relation = tuple.relation;
  out.arguments.resize(2);
  if (!tuple.arguments.empty()) out.arguments[0] = tuple.arguments[0];
  for (std::size_t k = 1; k < tuple.arguments.size(); ++k) {
    out.arguments[1].insert(out.arguments[1].end(), tuple.arguments[k].begin(),
                            tuple.arguments[k].end());
  }
  std::sort(out.arguments[1].begin(), out.arguments[1].end());
  out.arguments[1].erase(std::unique(out.arguments[1].begin(), out.arguments[1].end()),
                         out.arguments[1].end());
  return out;
}

ScoreReport Score(Scheme scheme, std::span<const TupleRecord> pred,
                  std::span<const TupleRecord> gold, const ScoreOptions &options) {
  std::unordered_map<std::string, const TupleRecord *> pred_by_id;
  for (const auto &rec : pred) {
    if (!pred_by_id.emplace(rec.sentence.id, &rec).second) {
      throw InputError("duplicate sentence id in predictions: " + rec.sentence.id);
    }
  }
  const bool binarize = scheme == Scheme::kCarb && options.binarize;
  std::unordered_map<std::string, bool> gold_ids;
  std::vector<SentenceInput> inputs;
  ScoreReport report;
  report.scheme = scheme;
  for (const auto &rec : gold) {
    const auto &id = rec.sentence.id;
    if (!gold_ids.emplace(id, true).second) {
      throw InputError("duplicate sentence id in references: " + id);
    }
    auto it = pred_by_id.find(id);
    if (it == pred_by_id.end()) {
      throw InputError("sentence-id mismatch: " + id + " has no predictions record");
    }
    SentenceInput in;
    in.gold = &rec;
    in.pred = Canonical(*it->second, binarize);
    in.ref = Canonical(rec, binarize);
    if (scheme == Scheme::kCarb) {
      for (const auto &p : in.pred) RequireBinary(p.tuple, id);
      for (const auto &g : in.ref) RequireBinary(g.tuple, id);
      if (static_cast<int>(in.pred.size()) > options.greedy_warning_limit) {
        report.warnings.push_back("sentence " + id + ": greedy assignment over " +
                                  std::to_string(in.pred.size()) + " predictions");
      }
    }
    if (scheme == Scheme::kBenchie) {
      std::map<int, int> dense;
      for (const auto &g : in.ref) {
        if (g.entry->synset) {
          auto [pos, added] = dense.emplace(*g.entry->synset, in.synsets);
          if (added) ++in.synsets;
          in.synset.push_back(pos->second);
        } else {
          in.synset.push_back(in.synsets++);
        }
      }
    }
    inputs.push_back(std::move(in));
  }
  for (const auto &rec : pred) {
    if (!gold_ids.count(rec.sentence.id)) {
      throw InputError("sentence-id mismatch: " + rec.sentence.id + " has no reference record");
    }
  }

  const Totals t = ScoreAll(scheme, inputs, 0.0, false, &report.per_sentence);
  report.sentences = static_cast<int>(inputs.size());
  report.predicted = t.predicted;
  report.gold = t.gold;
  report.precision = t.precision();
  report.recall = t.recall();
  report.f1 = F1(report.precision, report.recall);

  if (options.auc) {
    std::vector<double> thresholds;
    for (const auto &in : inputs) {
      for (const auto &p : in.pred) {
        if (!p.entry->confidence) {
          throw InputError("sentence " + in.gold->sentence.id +
                           ": prediction without confidence, cannot compute AUC");
        }
        thresholds.push_back(*p.entry->confidence);
      }
    }
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    for (double th : thresholds) {
      const Totals at = ScoreAll(scheme, inputs, th, true, nullptr);
      report.curve.push_back({th, at.precision(), at.recall()});
    }
    std::stable_sort(report.curve.begin(), report.curve.end(),
                     [](const PrPoint &a, const PrPoint &b) { return a.recall < b.recall; });
    report.auc = CurveArea(report.curve);
  }
  return report;
}

ScoreReport ExactMatchScore(std::span<const TupleRecord> pred,
                            std::span<const TupleRecord> gold, const ScoreOptions &options) {
  return Score(Scheme::kExact, pred, gold, options);
}

ScoreReport CarbTokenScore(std::span<const TupleRecord> pred,
                           std::span<const TupleRecord> gold, const ScoreOptions &options) {
  return Score(Scheme::kCarb, pred, gold, options);
}

ScoreReport BenchieScore(std::span<const TupleRecord> pred,
                         std::span<const TupleRecord> synsets, const ScoreOptions &options) {
  return Score(Scheme::kBenchie, pred, synsets, options);
}

double CurveArea(std::span<const PrPoint> curve) {
  if (curve.empty()) return 0.0;
  double area = 0.0, r = 0.0, p = curve.front().precision;
  for (const auto &pt : curve) {
    area += (pt.recall - r) * (pt.precision + p) / 2;
    r = pt.recall;
    p = pt.precision;
  }
  return area;
}

std::string ScoreReportToJson(const ScoreReport &report) {
  using Json = nlohmann::ordered_json;
  auto pct = [](double v) { return Round(100 * v, 100); };
  Json j;
  j["scheme"] = SchemeName(report.scheme);
  j["sentences"] = report.sentences;
  j["predicted"] = report.predicted;
  j["gold"] = report.gold;
  j["precision"] = pct(report.precision);
  j["recall"] = pct(report.recall);
  j["f1"] = pct(report.f1);
  if (report.auc) {
    j["auc"] = pct(*report.auc);
    Json curve = Json::array();
    for (const auto &pt : report.curve) {
      curve.push_back({{"threshold", Round(pt.threshold, 1e6)},
                       {"precision", pct(pt.precision)},
                       {"recall", pct(pt.recall)}});
    }
    j["curve"] = std::move(curve);
  }
  j["warnings"] = report.warnings;
  Json per = Json::array();
  for (const auto &s : report.per_sentence) {
    per.push_back({{"id", s.id},
                   {"predicted", s.predicted},
                   {"gold", s.gold},
                   {"precision_credit", Round(s.precision_credit, 1e6)},
                   {"recall_credit", Round(s.recall_credit, 1e6)}});
  }
  j["per_sentence"] = std::move(per);
  return j.dump(2);
}

std::string ScoreReportTable(const ScoreReport &report) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s: P=%.1f R=%.1f F1=%.1f", std::string(SchemeName(report.scheme)).c_str(),
                100 * report.precision, 100 * report.recall, 100 * report.f1);
  std::string out = buf;
  if (report.auc) {
    std::snprintf(buf, sizeof buf, " AUC=%.1f", 100 * *report.auc);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, " (sentences %d, predicted %d, gold %d)", report.sentences,
                report.predicted, report.gold);
  return out + buf;
}

}  // namespace sacoie

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

#include "sacoie/align/span_alignment.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <omp.h>

#include "sacoie/io/errors.h"

namespace sacoie {

std::string_view MatchCaseName(MatchCase c) {
  switch (c) {
    case MatchCase::kMatchExact:
      return "Match-Exact";
    case MatchCase::kMatchConcatenation:
      return "Match-Concatenation";
    case MatchCase::kMismatchOverlap:
      return "Mismatch-Overlap";
    case MatchCase::kMismatchNoOverlap:
      return "Mismatch-NoOverlap";
  }
  return "?";
}

namespace {

bool StartsChunk(const ChunkSequence &cs, int t) {
  return cs.chunks[ChunkOfToken(cs, t)].start == t;
}

bool EndsChunk(const ChunkSequence &cs, int t) {
  return cs.chunks[ChunkOfToken(cs, t)].end == t;
}

}  // namespace

MatchCase ClassifyGoldSpan(TokenRange span, const ChunkSequence &cs) {
  if (span.start < 0 || span.end >= cs.token_count() || span.start > span.end) {
    throw std::out_of_range("gold span outside sentence");
  }
  if (!StartsChunk(cs, span.start) || !EndsChunk(cs, span.end)) {
    return MatchCase::kMismatchOverlap;
  }
  return ChunkOfToken(cs, span.start) == ChunkOfToken(cs, span.end)
             ? MatchCase::kMatchExact
             : MatchCase::kMatchConcatenation;
}

MatchCase ClassifyChunk(const Chunk &chunk, std::span<const TokenRange> gold,
                        const ChunkSequence &cs) {
  const TokenRange c = chunk.range();
  bool concatenation = false;
  for (const auto &g : gold) {
    if (g == c) return MatchCase::kMatchExact;
    if (g.Contains(c) && g.end < cs.token_count() && StartsChunk(cs, g.start) &&
        EndsChunk(cs, g.end)) {
      concatenation = true;
    }
  }
  return concatenation ? MatchCase::kMatchConcatenation
                       : MatchCase::kMismatchNoOverlap;
}

bool OverlapsAnyGoldSpan(const Chunk &chunk, std::span<const TokenRange> gold) {
  return std::any_of(gold.begin(), gold.end(), [&](const TokenRange &g) {
    return g.Overlaps(chunk.range());
  });
}

std::vector<TokenRange> GoldSpans(std::span<const GoldTuple> tuples) {
  std::vector<TokenRange> out;
  auto add = [&](const std::vector<int> &tokens) {
    if (tokens.empty()) return;
    auto [lo, hi] = std::minmax_element(tokens.begin(), tokens.end());
    out.push_back({*lo, *hi});
  };
  for (const auto &t : tuples) {
    add(t.relation);
    for (const auto &a : t.arguments) add(a);
  }
  return out;
}

void AlignmentReport::Add(MatchCase c, int length) {
  auto &s = cases[static_cast<int>(c)];
  ++s.count;
  s.length_sum += length;
}

void AlignmentReport::Merge(const AlignmentReport &other) {
  for (int i = 0; i < kMatchCaseCount; ++i) {
    cases[i].count += other.cases[i].count;
    cases[i].length_sum += other.cases[i].length_sum;
  }
  partial_overlap += other.partial_overlap;
}

std::int64_t AlignmentReport::total() const {
  std::int64_t n = 0;
  for (const auto &c : cases) n += c.count;
  return n;
}

double AlignmentReport::Percent(MatchCase c) const {
  const auto n = total();
  return n == 0 ? 0.0 : 100.0 * static_cast<double>(at(c).count) / n;
}

double AlignmentReport::MatchPercent() const {
  return Percent(MatchCase::kMatchExact) + Percent(MatchCase::kMatchConcatenation);
}

double AlignmentReport::MatchMeanLength() const {
  const auto &e = at(MatchCase::kMatchExact);
  const auto &c = at(MatchCase::kMatchConcatenation);
  const auto n = e.count + c.count;
  return n == 0 ? 0.0 : static_cast<double>(e.length_sum + c.length_sum) / n;
}

double F1Score(double precision, double recall) {
  return precision + recall == 0.0
             ? 0.0
             : 2.0 * precision * recall / (precision + recall);
}

double AlignmentResult::F1() const { return F1Score(P(), R()); }

void AlignmentResult::Merge(const AlignmentResult &other) {
  precision.Merge(other.precision);
  recall.Merge(other.recall);
}

void AccumulateAlignment(const AlignmentInput &sentence, AlignmentResult *result) {
  const auto gold = GoldSpans(sentence.gold);
  for (const auto &span : gold) {
    result->recall.Add(ClassifyGoldSpan(span, sentence.chunks), span.length());
  }
  for (const auto &chunk : sentence.chunks.chunks) {
    const MatchCase c = ClassifyChunk(chunk, gold, sentence.chunks);
    result->precision.Add(c, chunk.length());
    if (c == MatchCase::kMismatchNoOverlap && OverlapsAnyGoldSpan(chunk, gold)) {
      ++result->precision.partial_overlap;
    }
  }
}

AlignmentResult AggregateAlignmentSerial(std::span<const AlignmentInput> corpus) {
  if (corpus.empty()) throw InputError("alignment analysis needs a non-empty corpus");
  AlignmentResult result;
  for (const auto &s : corpus) AccumulateAlignment(s, &result);
  return result;
}

AlignmentResult AggregateAlignment(std::span<const AlignmentInput> corpus) {
  if (corpus.empty()) throw InputError("alignment analysis needs a non-empty corpus");
  const auto n = static_cast<std::int64_t>(corpus.size());
  std::vector<AlignmentResult> partial(omp_get_max_threads());
#pragma omp parallel
  {
    auto &local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) AccumulateAlignment(corpus[i], &local);
  }
  AlignmentResult result;
  for (const auto &p : partial) result.Merge(p);
  return result;
}

SpanStats SpanStatistics(std::span<const TokenRange> spans) {
  SpanStats s;
  s.count = static_cast<std::int64_t>(spans.size());
  std::int64_t total = 0;
  for (const auto &r : spans) total += r.length();
  s.mean_length = s.count == 0 ? 0.0 : static_cast<double>(total) / s.count;
  return s;
}

std::vector<TokenRange> EnumerateSpanOieSpans(const AnnotatedSentence &s,
                                              int max_len) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<int> head(n, kRootHead);
  for (const auto &arc : s.arcs) head[arc.dependent] = arc.head;

  std::vector<TokenRange> out;
  for (int start = 0; start < n; ++start) {
    for (int end = start; end < n && end - start + 1 <= max_len; ++end) {
      if (start == end) {
        if (!s.arcs.empty() && head[start] == kRootHead) out.push_back({start, end});
        continue;
      }
      bool keep = true;
      for (int t = start; t <= end && keep; ++t) {
        bool linked = head[t] >= start && head[t] <= end;
        for (int u = start; u <= end && !linked; ++u) linked = head[u] == t;
        keep = linked;
      }
      if (keep) out.push_back({start, end});
    }
  }
  return out;
}

namespace {

std::string Fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

void RenderSide(std::ostringstream &out, const AlignmentReport &r) {
  const bool precision = r.side == AlignmentSide::kPrecision;
  const char *len = precision ? "L_p" : "L_s";
  out << (precision ? "Precision" : "Recall") << " (" << r.total()
      << (precision ? " chunks" : " gold spans") << ")\n";
  out << "  case                     percent  " << len << "\n";
  auto row = [&](std::string_view name, double pct, double mean) {
    std::string label(name);
    label.resize(24, ' ');
    out << "  " << label << " " << Fixed1(pct) << "%  " << Fixed1(mean) << "\n";
  };
  row("Match", r.MatchPercent(), r.MatchMeanLength());
  row("  -Exact", r.Percent(MatchCase::kMatchExact),
      r.at(MatchCase::kMatchExact).MeanLength());
  row("  -Concatenation", r.Percent(MatchCase::kMatchConcatenation),
      r.at(MatchCase::kMatchConcatenation).MeanLength());
  const MatchCase miss =
      precision ? MatchCase::kMismatchNoOverlap : MatchCase::kMismatchOverlap;
  row(MatchCaseName(miss), r.Percent(miss), r.at(miss).MeanLength());
  if (precision) {
    out << "  (partially overlapping a gold span: " << r.partial_overlap << ")\n";
  }
}

}  // namespace

std::string RenderAlignmentTable(const AlignmentResult &result) {
  std::ostringstream out;
  RenderSide(out, result.precision);
  RenderSide(out, result.recall);
  out << "P=" << Fixed1(result.P()) << " R=" << Fixed1(result.R())
      << " F1=" << Fixed1(result.F1()) << "\n";
  return out.str();
}

std::string AlignmentToJson(const AlignmentResult &result) {
  using Json = nlohmann::ordered_json;
  auto side = [](const AlignmentReport &r) {
    Json j;
    j["total"] = r.total();
    Json cases = Json::object();
    for (int i = 0; i < kMatchCaseCount; ++i) {
      const auto c = static_cast<MatchCase>(i);
      cases[std::string(MatchCaseName(c))] = {
          {"count", r.at(c).count},
          {"percent", std::stod(Fixed1(r.Percent(c)))},
          {"mean_length", std::stod(Fixed1(r.at(c).MeanLength()))}};
    }
    j["cases"] = std::move(cases);
    j["match_percent"] = std::stod(Fixed1(r.MatchPercent()));
    if (r.side == AlignmentSide::kPrecision) j["partial_overlap"] = r.partial_overlap;
    return j;
  };
  Json j;
  j["precision"] = side(result.precision);
  j["recall"] = side(result.recall);
  j["P"] = std::stod(Fixed1(result.P()));
  j["R"] = std::stod(Fixed1(result.R()));
  j["F1"] = std::stod(Fixed1(result.F1()));
  return j.dump(2) + "\n";
}

}  // namespace sacoie

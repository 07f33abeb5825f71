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

#include "sacoie/io/conllu.h"

#include <charconv>
#include <istream>
#include <ostream>

#include "sacoie/io/errors.h"

namespace sacoie {
namespace {

constexpr std::string_view kSentIdPrefix = "# sent_id = ";

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

bool ParseInt(std::string_view s, int *value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

void CheckDependencyTree(const AnnotatedSentence &s, const std::string &source,
                         int line) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<int> head(n, -2);
  int roots = 0;
  for (const auto &arc : s.arcs) {
    if (arc.dependent < 0 || arc.dependent >= n) {
      throw FormatError(source, line, "arc dependent out of range");
    }
    if (arc.head != kRootHead && (arc.head < 0 || arc.head >= n)) {
      throw FormatError(source, line, "HEAD out of range");
    }
    if (head[arc.dependent] != -2) {
      throw FormatError(source, line, "token with two heads");
    }
    head[arc.dependent] = arc.head;
    if (arc.head == kRootHead) ++roots;
  }
  if (s.arcs.empty()) return;
  if (roots != 1) {
    throw FormatError(source, line,
                      "expected one root, found " + std::to_string(roots));
  }
  // Every token must reach ROOT within n steps.
  for (int t = 0; t < n; ++t) {
    int cur = t;
    int steps = 0;
    while (cur != kRootHead) {
      if (cur == -2 || head[cur] == -2) {
        throw FormatError(source, line, "token without head");
      }
      cur = head[cur];
      if (++steps > n) throw FormatError(source, line, "cyclic dependency arcs");
    }
  }
}

std::vector<AnnotatedSentence> ParseConllu(std::istream &in,
                                           const std::string &source) {
  std::vector<AnnotatedSentence> corpus;
  AnnotatedSentence current;
  std::string pending_id;
  int sentence_line = 0;
  std::string line;
  int line_no = 0;

  auto flush = [&] {
    if (current.tokens.empty()) {
      pending_id.clear();
      return;
    }
    current.id = pending_id.empty() ? std::to_string(corpus.size()) : pending_id;
    CheckDependencyTree(current, source, sentence_line);
    corpus.push_back(std::move(current));
    current = {};
    pending_id.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      if (line.rfind(kSentIdPrefix, 0) == 0) {
        if (!current.tokens.empty()) flush();
        pending_id = line.substr(kSentIdPrefix.size());
      }
      continue;
    }
    auto cols = SplitTabs(line);
    if (cols.size() != 10) {
      throw FormatError(source, line_no, "expected 10 tab-separated columns");
    }
    if (cols[0].find('-') != std::string_view::npos ||
        cols[0].find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    int id = 0, head = 0;
    if (!ParseInt(cols[0], &id)) {
      throw FormatError(source, line_no, "non-integer ID");
    }
    if (!ParseInt(cols[6], &head)) {
      throw FormatError(source, line_no, "non-integer HEAD '" +
                                             std::string(cols[6]) + "'");
    }
    if (current.tokens.empty()) sentence_line = line_no;
    const int index = static_cast<int>(current.tokens.size());
    if (id != index + 1) {
      throw FormatError(source, line_no, "token ids must be 1..n in order");
    }

    Token tok;
    tok.index = index;
    tok.surface = std::string(cols[1]);
    tok.pos = std::string(cols[3] == "_" ? cols[4] : cols[3]);
    tok.is_verb = IsVerbTag(tok.pos);
    for (auto field = cols[9]; !field.empty();) {
      auto bar = field.find('|');
      auto item = field.substr(0, bar);
      if (item == "Verb=Yes") tok.is_verb = true;
      if (item == "Verb=No") tok.is_verb = false;
      field = bar == std::string_view::npos ? std::string_view{}
                                            : field.substr(bar + 1);
    }
    current.tokens.push_back(std::move(tok));
    current.arcs.push_back({head == 0 ? kRootHead : head - 1, index,
                            cols[7] == "_" ? std::string() : std::string(cols[7])});
  }
  flush();
  return corpus;
}

void WriteConllu(std::ostream &out, std::span<const AnnotatedSentence> corpus) {
  for (const auto &s : corpus) {
    out << kSentIdPrefix << s.id << '\n';
    for (const auto &tok : s.tokens) {
      const auto *arc = s.ArcOf(tok.index);
      out << tok.index + 1 << '\t' << tok.surface << "\t_\t" << tok.pos
          << "\t_\t_\t";
      if (arc != nullptr) {
        out << (arc->head == kRootHead ? 0 : arc->head + 1) << '\t'
            << (arc->label.empty() ? "_" : arc->label);
      } else {
        out << "_\t_";
      }
      out << "\t_\t" << (tok.is_verb ? "Verb=Yes" : "Verb=No") << '\n';
    }
    out << '\n';
  }
}

}  // namespace sacoie

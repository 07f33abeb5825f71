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

#ifndef SACOIE_IO_CONLLU_H_
#define SACOIE_IO_CONLLU_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sacoie/core/types.h"

namespace sacoie {

// Reads ID, FORM, UPOS (XPOS when UPOS is "_"), HEAD and DEPREL. Comment
// lines are skipped except "# sent_id = ..."; multiword ranges and empty
// nodes are skipped. The verb flag comes from MISC "Verb=Yes|No" when
// present, otherwise from the POS tag. Throws FormatError on bad HEAD
// values and on arcs that do not form a single-rooted tree.
std::vector<AnnotatedSentence> ParseConllu(std::istream &in,
                                           const std::string &source = "<conllu>");

void WriteConllu(std::ostream &out, std::span<const AnnotatedSentence> corpus);

// Throws FormatError unless the arcs form a tree with exactly one root.
void CheckDependencyTree(const AnnotatedSentence &s, const std::string &source,
                         int line);

}  // namespace sacoie

#endif  // SACOIE_IO_CONLLU_H_

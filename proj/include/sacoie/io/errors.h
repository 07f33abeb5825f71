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

#ifndef SACOIE_IO_ERRORS_H_
#define SACOIE_IO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sacoie {

// Bad user input: unreadable files, malformed records, inconsistent corpora.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed record in a corpus file. `line` is 1-based (record number for
// JSON Lines, 0 when not applicable).
class FormatError : public InputError {
 public:
  FormatError(const std::string &source, int line, const std::string &what)
      : InputError(source + (line > 0 ? ":" + std::to_string(line) : "") +
                   ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct ParseWarning {
  int line = 0;
  std::string message;
};

}  // namespace sacoie

#endif  // SACOIE_IO_ERRORS_H_

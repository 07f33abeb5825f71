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

// The sac-oie command line. Exit codes: 0 success, 1 bad input (including
// usage errors and unreadable files), 2 internal error.

#ifndef SACOIE_CLI_CLI_H_
#define SACOIE_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sacoie {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

// Environment variables named SAC_OIE_<OPTION> (upper case, dashes as
// underscores) fill options not given on the command line; a --config file
// fills the rest.
int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace sacoie

#endif  // SACOIE_CLI_CLI_H_

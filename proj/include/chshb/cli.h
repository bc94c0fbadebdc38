// Copyright 2026 The chshb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHSHB_CLI_H
#define CHSHB_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace chshb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Tables go to
/// `out` unless --out is given; diagnostics go to `err`.
///
/// Exit codes: 0 success with every internal tolerance check passing, 1 on a
/// numerical failure or failed check, 2 on invalid arguments or input.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chshb

#endif

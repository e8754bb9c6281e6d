// Copyright 2026 The frobayes Authors
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


// Command-line front end.
//
//     frobayes <command> [options]
//
// Commands: eval, normalize, condition, invert, pool, ci, graphoid, entropy,
// verify.  Reports go to `out` as JSON with the keys command, residual, tol,
// result and warnings (or as key: value lines with --format text);
// diagnostics go to `err`.
//
// Exit codes: 0 success, 1 domain error (also kind and unsupported errors),
// 2 parse, shape, type or name error and bad arguments, 3 failed
// verification.

#pragma once

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace frobayes::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kParse = 2, kFailed = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for an exception escaping a command.
int exit_code(const std::exception& e) noexcept;

}  // namespace frobayes::cli

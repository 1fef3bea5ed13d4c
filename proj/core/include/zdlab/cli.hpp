// Copyright 2026 The zdlab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zdlab::cli {

/// Report schema version written into every document.
inline constexpr int kSchemaVersion = 1;

enum ExitStatus : int { kOk = 0, kSuiteFailure = 1, kUsage = 2 };

/// Runs one command line; args[0] is the program name.
///
///   analyze  --ring R --module M [--algebra A] [--check P --label L ...]
///   theorems [--suite GLOB] [bounds]
///   search   --hyp EXPR --concl EXPR
///   witness  --f F --g G --ring R [--module M]
///
/// The report goes to `out` (JSON by default, `--format text` for the
/// rendering derived from it); warnings and errors go to `err`. The cache
/// directory comes from ZDLAB_CACHE_DIR unless `--cache-dir` is given.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdlab::cli

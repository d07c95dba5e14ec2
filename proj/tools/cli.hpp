// Copyright 2026 The gausskit Authors
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

#ifndef _GAUSSKIT_CLI_H
#define _GAUSSKIT_CLI_H

#include <iostream>
#include <string>
#include <vector>

namespace gausskit::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

/// Runs one subcommand. `args` excludes the program name; "-" as a path reads `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace gausskit::cli

#endif

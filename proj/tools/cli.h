// Copyright 2026 The Rigicheck Authors.
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

// Entry point of the rigicheck command-line tool, kept in a library so the
// tests can drive it in-process.

#ifndef RIGICHECK_TOOLS_CLI_H_
#define RIGICHECK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rigicheck::cli {

// `args` excludes the program name. Writes the verdict JSON to `out` (or the
// --output file) and the summary table to `err` (or `out` when the JSON went
// to a file). Returns 0 true, 1 false, 2 inconclusive, 3 error.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigicheck::cli

#endif  // RIGICHECK_TOOLS_CLI_H_

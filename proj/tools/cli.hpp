/* Copyright 2026 The ccskp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CCSKP_TOOLS_CLI_HPP
#define CCSKP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ccskp::cli {

enum ExitCode : int { kOk = 0, kDoesNotHold = 1, kInvalidInput = 2, kResource = 3, kInternal = 4 };

/// Runs one command line (without the program name). The REPL reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ccskp::cli

#endif  // CCSKP_TOOLS_CLI_HPP

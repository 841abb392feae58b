// Copyright 2026 The minwit Authors
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


#ifndef MINWIT_TOOLS_CLI_H
#define MINWIT_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace minwit::cli {

/// Process exit codes. These values are part of the command-line contract.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kNotDetected = 3,
    kDataError = 4,
};

/// Parses angles such as "0.3", "pi", "-pi/4", "3pi/16" or "3*pi/16".
double parse_angle(std::string_view text);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace minwit::cli

int cli_main(int argc, char **argv);

#endif

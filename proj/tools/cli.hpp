// Copyright 2026 The Authors.
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

#ifndef CGEO_TOOLS_CLI_HPP_
#define CGEO_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cgeo::cli {

// Runs the command-line tool on the given arguments (program name excluded)
// and returns the process exit code:
//   0  success
//   1  the examined object was rejected (not a closure system, not a
//      convex geometry)
//   2  usage errors, unreadable or malformed input, refused guard limits
//   3  internal consistency violation or failed verification battery
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cgeo::cli

#endif  // CGEO_TOOLS_CLI_HPP_

// Copyright 2026 The pdhol Authors
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

#ifndef PDHOL_CLI_CLI_HPP_
#define PDHOL_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pdhol {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOpen = 1;
inline constexpr int kExitInput = 2;

// pdhol check|translate|prove FILE... [options]; `args` excludes the
// program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pdhol

#endif  // PDHOL_CLI_CLI_HPP_

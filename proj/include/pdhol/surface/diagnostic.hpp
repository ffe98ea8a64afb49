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

#ifndef PDHOL_SURFACE_DIAGNOSTIC_HPP_
#define PDHOL_SURFACE_DIAGNOSTIC_HPP_

#include <string>
#include <vector>

#include "pdhol/core/syntax.hpp"

namespace pdhol {

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string message;
  SourceSpan span;
};

// "file:line:col: error: message"
std::string format_diagnostic(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace pdhol

#endif  // PDHOL_SURFACE_DIAGNOSTIC_HPP_

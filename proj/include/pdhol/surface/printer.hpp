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

#ifndef PDHOL_SURFACE_PRINTER_HPP_
#define PDHOL_SURFACE_PRINTER_HPP_

#include <string>

#include "pdhol/core/syntax.hpp"

namespace pdhol {

// One declaration per line, in the syntax accepted by parse_problem.
std::string print_surface(const Problem& problem);
std::string print_declaration(const Declaration& decl);
std::string print_type(const TypeRef& type);
std::string print_term(const TermRef& term);
std::string print_context(const Context& ctx);

}  // namespace pdhol

#endif  // PDHOL_SURFACE_PRINTER_HPP_

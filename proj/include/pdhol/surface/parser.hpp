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

// Parser for the textual PDHOL format.
//
//   type vect (A : Type) (n : nat).
//   const cons (A : Type) (n : nat) : A -> vect A n -> vect A (suc n).
//   axiom plus_zero : ! (n : nat). plus zero n = n.
//   subtype hom (A : Type) (B : Type) (g : group A) (h : group B)
//       := A -> B | ishom A B g h.
//   conjecture c : ...
//
// Identifiers starting with an upper-case letter are type variables; all
// others are symbols or term variables. Symbol references take exactly the
// arguments of their declared parameter list; further arguments are
// ordinary applications. Connectives are desugared on the fly (see
// core/logic.hpp).

#ifndef PDHOL_SURFACE_PARSER_HPP_
#define PDHOL_SURFACE_PARSER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdhol/core/syntax.hpp"
#include "pdhol/surface/diagnostic.hpp"

namespace pdhol {

struct ParseResult {
  std::optional<Problem> problem;  // empty iff diagnostics has an error
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return problem.has_value(); }
};

ParseResult parse_problem(std::string_view source,
                          const std::string& file_label = "<input>");

// True if `text` contains a `_`-separated component reserved for generated
// names (per, abs, rep, tco<k>) after its first component.
bool is_reserved_name(std::string_view text);

}  // namespace pdhol

#endif  // PDHOL_SURFACE_PARSER_HPP_

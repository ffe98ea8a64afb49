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

// TPTP TH1 serialization of PHOL declarations.

#ifndef PDHOL_TPTP_TH1_HPP_
#define PDHOL_TPTP_TH1_HPP_

#include <string>
#include <vector>

#include "pdhol/core/syntax.hpp"

namespace pdhol {

enum class NameRole { kConstant, kVariable };

// Injective map from names to TPTP identifiers. Characters outside
// [A-Za-z0-9_], and an underscore followed by `x`, are written as _xHH.
// Constants start with a lower-case letter, variables with an upper-case
// one:
//
//   vect -> vect      plus' -> plus_x27     0 -> c_x30
//   x -> Vx           A_per -> A_per        Vec -> VVec
std::string mangle(const Name& name, NameRole role);

std::string th1_type(const TypeRef& type);
std::string th1_term(const TermRef& term);

// One TH1 problem: the declarations in order, then `goal` (a Conjecture)
// with role conjecture. `comments` become leading `% ` lines. Throws Error
// on constructs outside the PHOL fragment.
std::string emit_th1(const std::vector<Declaration>& theory,
                     const Declaration& goal,
                     const std::vector<std::string>& comments = {});

}  // namespace pdhol

#endif  // PDHOL_TPTP_TH1_HPP_

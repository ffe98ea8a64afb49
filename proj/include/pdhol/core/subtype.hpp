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

#ifndef PDHOL_CORE_SUBTYPE_HPP_
#define PDHOL_CORE_SUBTYPE_HPP_

#include <vector>

#include "pdhol/core/syntax.hpp"

namespace pdhol {

// Names of the functions a subtype definition `a := λΔ. A | p` introduces.
Name subtype_abs_name(const Name& a);
Name subtype_rep_name(const Name& a);
Name subtype_axiom_name(const Name& a);

// Elaborates `a := λΔ. A | p` into
//
//   a     : ΠΔ. type
//   a_abs : ΠΔ. A → a δ
//   a_rep : ΠΔ. a δ → A
//   a_abs_rep : ΠΔ. (∀u:a δ. p (a_rep δ u) ∧ a_abs δ (a_rep δ u) =[a δ] u)
//                 ∧ (∀v:A. p v ⇒ a_rep δ (a_abs δ v) =[A] v)
//
// where δ lists the parameters of Δ.
std::vector<Declaration> elaborate_subtype(const Declaration::SubtypeDef& def);

}  // namespace pdhol

#endif  // PDHOL_CORE_SUBTYPE_HPP_

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

// The usual connectives, encoded with λ, =, ⇒:
//
//   ⊤        := (λp:o. p) =[o→o] (λp:o. p)
//   ∀x:A. P  := (λx:A. P) =[A→o] (λx:A. ⊤)
//   ⊥        := ∀p:o. p
//   ¬P       := P ⇒ ⊥
//   P ∧ Q    := ¬(P ⇒ ¬Q)
//   P ∨ Q    := ¬P ⇒ Q
//   ∃x:A. P  := ¬∀x:A. ¬P
//   P ⟺ Q   := P =[o] Q
//
// The match_* functions recognize exactly these shapes (up to α) so that
// printers can show the sugar again.

#ifndef PDHOL_CORE_LOGIC_HPP_
#define PDHOL_CORE_LOGIC_HPP_

#include <optional>
#include <utility>

#include "pdhol/core/syntax.hpp"

namespace pdhol::logic {

TermRef mk_true();
TermRef mk_false();
TermRef mk_not(TermRef p);
TermRef mk_and(TermRef p, TermRef q);
TermRef mk_or(TermRef p, TermRef q);
TermRef mk_iff(TermRef p, TermRef q);
TermRef mk_forall(Name x, TypeRef type, TermRef body);
TermRef mk_exists(Name x, TypeRef type, TermRef body);
// ∀ over several bindings, outermost first.
TermRef mk_foralls(const std::vector<Binding>& binders, TermRef body);
// h1 ⇒ h2 ⇒ … ⇒ goal
TermRef mk_implies_chain(const std::vector<TermRef>& hyps, TermRef goal);
// Left-nested conjunction; ⊤ when empty.
TermRef mk_conj(const std::vector<TermRef>& parts);

struct Quantified {
  Name binder;
  TypeRef type;
  TermRef body;
};

bool is_true(const TermRef& t);
bool is_false(const TermRef& t);
std::optional<TermRef> match_not(const TermRef& t);
std::optional<std::pair<TermRef, TermRef>> match_and(const TermRef& t);
std::optional<std::pair<TermRef, TermRef>> match_or(const TermRef& t);
std::optional<Quantified> match_forall(const TermRef& t);
std::optional<Quantified> match_exists(const TermRef& t);
// An equality annotated with o.
std::optional<std::pair<TermRef, TermRef>> match_iff(const TermRef& t);

}  // namespace pdhol::logic

#endif  // PDHOL_CORE_LOGIC_HPP_

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

// Dependency erasure from PDHOL to PHOL. Term arguments of types are
// dropped and the information they carried is recorded in partial
// equivalence relations: every type A gets a relation A* on its erasure,
// every type symbol a a relation constant a_per and every type variable α
// a relation variable α_per.
//
// Output is expressed in the shared AST restricted to the PHOL fragment.

#ifndef PDHOL_ERASURE_ERASURE_HPP_
#define PDHOL_ERASURE_ERASURE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdhol/checker/checker.hpp"
#include "pdhol/core/syntax.hpp"

namespace pdhol {

// Controls when PERs are replaced by plain equality.
struct PerPolicy {
  // The PER-to-equality optimization. When off, every type symbol except o
  // gets a PER and every type variable a relation parameter.
  bool collapse = true;
  // Type variables range over PHOL types only, so their PERs are equality.
  // Set by make_policy for dependency-free theories when collapsing.
  bool type_vars_trivial = false;
  // Verdict per type symbol.
  std::map<Name, bool> trivial_symbols;
};

// A symbol is trivial iff it has no term parameters and either no type
// parameters or trivial type variables. Subtype definitions contribute
// their elaborated type symbol.
PerPolicy make_policy(const Theory& theory, bool collapse);

// True iff A's PER is provably equality under the policy: o, trivial
// symbols, type variables when they are trivial, and Π of trivial parts.
bool is_per_trivial(const TypeRef& type, const PerPolicy& policy);

// a ↦ a_per, α ↦ α_per.
Name per_name(const Name& symbol);

TypeRef erase_type(const TypeRef& type);
TermRef erase_term(const TermRef& term, const PerPolicy& policy);

// A*(lhs, rhs) for erased lhs/rhs.
TermRef per_formula(const TypeRef& type, const TermRef& lhs,
                    const TermRef& rhs, const PerPolicy& policy);
// λx,y:Ā. A*(x, y), eta-contracted where possible.
TermRef per_relation(const TypeRef& type, const PerPolicy& policy);

// Symmetry ∧ transitivity of `rel` on `carrier`.
TermRef is_per(const TermRef& rel, const TypeRef& carrier);

Context erase_context(const Context& ctx, const PerPolicy& policy);
Substitution erase_subst(const Substitution& delta, const Context& target,
                         const PerPolicy& policy);

// Γ ⇒ Ψ over an erased context: term variables become ∀ binders, then the
// assumptions become hypotheses, in context order. Type variables are left
// free (they become declaration parameters).
TermRef bind_context(const Context& erased, const TermRef& body);
// The type variables of an erased context, as declaration parameters.
Context type_params(const Context& erased);

struct PholTheory {
  std::vector<Declaration> declarations;
  // Index of the source declaration each output declaration came from.
  std::vector<std::size_t> origin;

  // Output declarations produced by the first `n` source declarations.
  std::vector<Declaration> prefix(std::size_t n) const;
};

PholTheory erase_theory(const Theory& theory, const PerPolicy& policy);

Declaration erase_conjecture(const Declaration& conjecture,
                             const PerPolicy& policy);
// The obligation as a PHOL conjecture labelled with its id.
Declaration erase_obligation(const Obligation& obligation,
                             const PerPolicy& policy);

// The PHOL subtype definition a := λᾱ. Ā | λu. A*(u,u) ∧ p̄ u.
Declaration::SubtypeDef translate_subtype_definition(
    const Declaration::SubtypeDef& def, const PerPolicy& policy);

// Description of the first construct outside the PHOL fragment, if any.
std::optional<std::string> phol_violation(const TypeRef& type);
std::optional<std::string> phol_violation(const TermRef& term);
std::optional<std::string> phol_violation(const Declaration& decl);
std::optional<std::string> phol_violation(const std::vector<Declaration>& decls);

}  // namespace pdhol

#endif  // PDHOL_ERASURE_ERASURE_HPP_

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

// Binding-aware operations on the shared syntax: free variables,
// capture-avoiding simultaneous substitution, alpha-equivalence and
// beta/eta normalization.

#ifndef PDHOL_CORE_OPS_HPP_
#define PDHOL_CORE_OPS_HPP_

#include <map>
#include <set>

#include "pdhol/core/syntax.hpp"

namespace pdhol {

using NameSet = std::set<Name>;

// Free term and type variables. Binders (Π, λ, type-lambda parameters) are
// excluded; type variables are never bound inside expressions.
NameSet free_vars(const TypeRef& type);
NameSet free_vars(const TermRef& term);
NameSet free_vars(const TypeLambda& lam);
NameSet free_vars(const Substitution& subst);
void collect_free_vars(const TypeRef& type, NameSet& out);
void collect_free_vars(const TermRef& term, NameSet& out);

bool occurs_free(const Name& name, const TypeRef& type);
bool occurs_free(const Name& name, const TermRef& term);

// `base` followed by as many primes as needed to leave `avoid`.
Name fresh_name(const Name& base, const NameSet& avoid);

// Finite map from variables to substitutes. Variables outside the map are
// left unchanged.
class SubstMap {
 public:
  void bind_term(const Name& var, TermRef value);
  void bind_type(const Name& var, TypeLambda value);
  void erase(const Name& var);

  bool empty() const { return terms_.empty() && types_.empty(); }
  const TermRef* term(const Name& var) const;
  const TypeLambda* type(const Name& var) const;
  // Free variables of every substitute in the map.
  NameSet range_free_vars() const;

 private:
  std::map<Name, TermRef> terms_;
  std::map<Name, TypeLambda> types_;
};

TypeRef substitute(const TypeRef& type, const SubstMap& map);
TermRef substitute(const TermRef& term, const SubstMap& map);
TypeLambda substitute(const TypeLambda& lam, const SubstMap& map);
Substitution substitute(const Substitution& subst, const SubstMap& map);

// Zips a substitution with the context it instantiates. Check entries bind
// nothing. Throws Error on length or entry-kind mismatch.
SubstMap make_subst_map(const Substitution& delta, const Context& domain);

// E[δ] for an expression over `domain`. Throws Error when δ does not match
// the domain or when the expression has a free variable the domain does not
// declare.
TypeRef subst_apply(const TypeRef& type, const Substitution& delta,
                    const Context& domain);
TermRef subst_apply(const TermRef& term, const Substitution& delta,
                    const Context& domain);

// The identity substitution of a context: every variable maps to itself,
// kinded type variables are eta-expanded, assumptions map to a check mark.
Substitution identity_substitution(const Context& context);

// B[x̄ ↦ t̄] for a type-level lambda applied to arguments.
TypeRef instantiate(const TypeLambda& lam, const std::vector<TermRef>& args);

bool alpha_eq(const TypeRef& a, const TypeRef& b);
bool alpha_eq(const TermRef& a, const TermRef& b);
bool alpha_eq(const TypeLambda& a, const TypeLambda& b);
bool alpha_eq(const Substitution& a, const Substitution& b);
bool alpha_eq(const Context& a, const Context& b);
bool alpha_eq(const Declaration& a, const Declaration& b);
bool alpha_eq(const Problem& a, const Problem& b);

inline constexpr int kDefaultNormalizeBudget = 10000;

// Beta-reduces every redex and eta-contracts λx. f x when x is not free in f,
// including inside type annotations. Throws Error("normalization budget
// exceeded") after `budget` reduction steps.
TermRef normalize(const TermRef& term, int budget = kDefaultNormalizeBudget);
TypeRef normalize(const TypeRef& type, int budget = kDefaultNormalizeBudget);

// Beta-reduces a head redex (λx.b) a once; any other application is built
// as is.
TermRef apply_reducing(const TermRef& fun, const TermRef& arg);

}  // namespace pdhol

#endif  // PDHOL_CORE_OPS_HPP_

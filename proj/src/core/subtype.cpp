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

#include "pdhol/core/subtype.hpp"

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"

namespace pdhol {

Name subtype_abs_name(const Name& a) { return Name{a.text + "_abs"}; }
Name subtype_rep_name(const Name& a) { return Name{a.text + "_rep"}; }
Name subtype_axiom_name(const Name& a) { return Name{a.text + "_abs_rep"}; }

std::vector<Declaration> elaborate_subtype(const Declaration::SubtypeDef& def) {
  const Context& params = def.params;
  Substitution delta = identity_substitution(params);
  TypeRef sub = mk::base(def.name, delta);
  const TypeRef& carrier = def.carrier;

  NameSet avoid = free_vars(def.predicate);
  collect_free_vars(carrier, avoid);
  for (const auto& e : params)
    if (const Name* n = e.name()) avoid.insert(*n);
  Name u = fresh_name("u", avoid);
  Name v = fresh_name("v", avoid);

  auto abs = [&](TermRef t) {
    return mk::app(mk::cnst(subtype_abs_name(def.name), delta), std::move(t));
  };
  auto rep = [&](TermRef t) {
    return mk::app(mk::cnst(subtype_rep_name(def.name), delta), std::move(t));
  };

  TermRef rep_u = rep(mk::var(u));
  TermRef first = logic::mk_forall(
      u, sub,
      logic::mk_and(mk::app(def.predicate, rep_u),
                    mk::eq(sub, abs(rep_u), mk::var(u))));
  TermRef second = logic::mk_forall(
      v, carrier,
      mk::implies(mk::app(def.predicate, mk::var(v)),
                  mk::eq(carrier, rep(abs(mk::var(v))), mk::var(v))));

  std::vector<Declaration> out;
  out.push_back(Declaration{Declaration::TypeSym{def.name, params}, {}});
  out.push_back(Declaration{
      Declaration::TermSym{subtype_abs_name(def.name), params,
                           mk::arrow(carrier, sub)},
      {}});
  out.push_back(Declaration{
      Declaration::TermSym{subtype_rep_name(def.name), params,
                           mk::arrow(sub, carrier)},
      {}});
  out.push_back(Declaration{
      Declaration::Axiom{subtype_axiom_name(def.name), params,
                         logic::mk_and(first, second)},
      {}});
  return out;
}

}  // namespace pdhol

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

#include "pdhol/core/logic.hpp"

#include "pdhol/core/ops.hpp"

namespace pdhol::logic {
namespace {

TermRef identity_on_bool() {
  static const TermRef id = mk::lam("p", mk::boolean(), mk::var("p"));
  return id;
}

TypeRef bool_to_bool() {
  static const TypeRef t = mk::arrow(mk::boolean(), mk::boolean());
  return t;
}

const Term::Implies* as_implies(const TermRef& t) {
  return std::get_if<Term::Implies>(&t->node);
}

}  // namespace

TermRef mk_true() {
  static const TermRef t =
      mk::eq(bool_to_bool(), identity_on_bool(), identity_on_bool());
  return t;
}

TermRef mk_forall(Name x, TypeRef type, TermRef body) {
  TypeRef pred = mk::arrow(type, mk::boolean());
  return mk::eq(pred, mk::lam(x, type, std::move(body)),
                mk::lam(x, type, mk_true()));
}

TermRef mk_false() {
  static const TermRef f = mk_forall("p", mk::boolean(), mk::var("p"));
  return f;
}

TermRef mk_not(TermRef p) { return mk::implies(std::move(p), mk_false()); }

TermRef mk_and(TermRef p, TermRef q) {
  return mk_not(mk::implies(std::move(p), mk_not(std::move(q))));
}

TermRef mk_or(TermRef p, TermRef q) {
  return mk::implies(mk_not(std::move(p)), std::move(q));
}

TermRef mk_iff(TermRef p, TermRef q) {
  return mk::eq(mk::boolean(), std::move(p), std::move(q));
}

TermRef mk_exists(Name x, TypeRef type, TermRef body) {
  return mk_not(mk_forall(std::move(x), std::move(type), mk_not(std::move(body))));
}

TermRef mk_foralls(const std::vector<Binding>& binders, TermRef body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = mk_forall(it->name, it->type, body);
  return body;
}

TermRef mk_implies_chain(const std::vector<TermRef>& hyps, TermRef goal) {
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
    goal = mk::implies(*it, goal);
  return goal;
}

TermRef mk_conj(const std::vector<TermRef>& parts) {
  if (parts.empty()) return mk_true();
  TermRef acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = mk_and(acc, parts[i]);
  return acc;
}

bool is_true(const TermRef& t) {
  auto* e = std::get_if<Term::Eq>(&t->node);
  if (!e || !e->type) return false;
  return alpha_eq(e->type, bool_to_bool()) &&
         alpha_eq(e->lhs, identity_on_bool()) &&
         alpha_eq(e->rhs, identity_on_bool());
}

std::optional<Quantified> match_forall(const TermRef& t) {
  auto* e = std::get_if<Term::Eq>(&t->node);
  if (!e || !e->type) return std::nullopt;
  auto* pi = std::get_if<Type::Pi>(&e->type->node);
  if (!pi || !std::holds_alternative<Type::Bool>(pi->codomain->node))
    return std::nullopt;
  auto* l = std::get_if<Term::Lambda>(&e->lhs->node);
  auto* r = std::get_if<Term::Lambda>(&e->rhs->node);
  if (!l || !r) return std::nullopt;
  if (!alpha_eq(l->domain, pi->domain) || !alpha_eq(r->domain, pi->domain))
    return std::nullopt;
  if (!is_true(r->body)) return std::nullopt;
  return Quantified{l->binder, l->domain, l->body};
}

bool is_false(const TermRef& t) {
  auto q = match_forall(t);
  if (!q || !std::holds_alternative<Type::Bool>(q->type->node)) return false;
  auto* v = std::get_if<Term::Var>(&q->body->node);
  return v && v->name == q->binder;
}

std::optional<TermRef> match_not(const TermRef& t) {
  auto* i = as_implies(t);
  if (!i || !is_false(i->rhs)) return std::nullopt;
  return i->lhs;
}

std::optional<std::pair<TermRef, TermRef>> match_and(const TermRef& t) {
  auto inner = match_not(t);
  if (!inner) return std::nullopt;
  auto* i = as_implies(*inner);
  if (!i) return std::nullopt;
  auto q = match_not(i->rhs);
  if (!q) return std::nullopt;
  return std::make_pair(i->lhs, *q);
}

std::optional<std::pair<TermRef, TermRef>> match_or(const TermRef& t) {
  auto* i = as_implies(t);
  if (!i || is_false(i->rhs)) return std::nullopt;
  // (P ∧ Q) ⇒ R reads better as an implication than as ¬(P ⇒ ¬Q) ∨ R.
  if (match_and(i->lhs)) return std::nullopt;
  auto p = match_not(i->lhs);
  if (!p) return std::nullopt;
  return std::make_pair(*p, i->rhs);
}

std::optional<Quantified> match_exists(const TermRef& t) {
  auto inner = match_not(t);
  if (!inner) return std::nullopt;
  auto q = match_forall(*inner);
  if (!q) return std::nullopt;
  auto body = match_not(q->body);
  if (!body) return std::nullopt;
  return Quantified{q->binder, q->type, *body};
}

std::optional<std::pair<TermRef, TermRef>> match_iff(const TermRef& t) {
  auto* e = std::get_if<Term::Eq>(&t->node);
  if (!e || !e->type || !std::holds_alternative<Type::Bool>(e->type->node))
    return std::nullopt;
  return std::make_pair(e->lhs, e->rhs);
}

}  // namespace pdhol::logic

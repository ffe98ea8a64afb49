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

#include "pdhol/erasure/erasure.hpp"

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/core/subtype.hpp"

namespace pdhol {
namespace {

bool is_anonymous(const Name& x) { return x.text == kAnonymousBinder; }

bool trivial_symbol(const Name& a, const PerPolicy& policy) {
  auto it = policy.trivial_symbols.find(a);
  return it != policy.trivial_symbols.end() && it->second;
}

bool collapses(const TypeRef& a, const PerPolicy& policy) {
  return policy.collapse && is_per_trivial(a, policy);
}

TermRef lambda_relation(const TypeLambda& lam, const PerPolicy& policy) {
  TermRef rel = per_relation(lam.body, policy);
  for (auto it = lam.params.rbegin(); it != lam.params.rend(); ++it)
    rel = mk::lam(it->name, erase_type(it->type), rel);
  return rel;
}

// Splits an erased argument list into the type arguments (the ẏ part) and
// the term-level arguments (the ë part without the type arguments).
std::pair<Substitution, std::vector<TermRef>> erase_args(
    const Substitution& args, const PerPolicy& policy) {
  Substitution types;
  std::vector<TermRef> terms;
  for (const auto& e : args) {
    if (e.is_type()) {
      types.push_back(mk::type_arg(erase_type(e.type().body)));
      if (!policy.type_vars_trivial)
        terms.push_back(lambda_relation(e.type(), policy));
    } else if (e.is_term()) {
      terms.push_back(erase_term(e.term(), policy));
    }
  }
  return {std::move(types), std::move(terms)};
}

Substitution identity_type_args(const Context& type_params) {
  Substitution out;
  for (const auto& e : type_params)
    out.push_back(mk::type_arg(mk::tvar(*e.name())));
  return out;
}

std::vector<TermRef> term_vars_of(const Context& erased) {
  std::vector<TermRef> out;
  for (const auto& e : erased)
    if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value))
      out.push_back(mk::var(v->name));
  return out;
}

std::vector<TypeRef> term_var_types(const Context& erased) {
  std::vector<TypeRef> out;
  for (const auto& e : erased)
    if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value))
      out.push_back(v->type);
  return out;
}

void erase_declaration(const Declaration& decl, const PerPolicy& policy,
                       std::vector<Declaration>& out) {
  Context ctx = erase_context(decl.params(), policy);
  Context tparams = type_params(ctx);
  Substitution targs = identity_type_args(tparams);

  if (auto* t = std::get_if<Declaration::TypeSym>(&decl.value)) {
    out.push_back(Declaration{Declaration::TypeSym{t->name, tparams}, decl.span});
    if (trivial_symbol(t->name, policy)) return;
    TypeRef self = mk::base(t->name, targs);
    std::vector<TypeRef> doms = term_var_types(ctx);
    doms.push_back(self);
    doms.push_back(self);
    Name per = per_name(t->name);
    out.push_back(Declaration{
        Declaration::TermSym{per, tparams, mk::arrows(doms, mk::boolean())},
        decl.span});
    TermRef rel = mk::apps(mk::cnst(per, targs), term_vars_of(ctx));
    out.push_back(Declaration{
        Declaration::Axiom{Name{per.text + "_isper"}, tparams,
                           bind_context(ctx, is_per(rel, self))},
        decl.span});
  } else if (auto* c = std::get_if<Declaration::TermSym>(&decl.value)) {
    out.push_back(Declaration{
        Declaration::TermSym{c->name, tparams,
                             mk::arrows(term_var_types(ctx), erase_type(c->type))},
        decl.span});
    if (collapses(c->type, policy)) return;
    TermRef self = mk::apps(mk::cnst(c->name, targs), term_vars_of(ctx));
    out.push_back(Declaration{
        Declaration::Axiom{Name{per_name(c->name).text + "_typing"}, tparams,
                           bind_context(ctx, per_formula(c->type, self, self,
                                                         policy))},
        decl.span});
  } else if (auto* a = std::get_if<Declaration::Axiom>(&decl.value)) {
    out.push_back(Declaration{
        Declaration::Axiom{a->label, tparams,
                           bind_context(ctx, erase_term(a->formula, policy))},
        decl.span});
  } else if (std::holds_alternative<Declaration::Conjecture>(decl.value)) {
    out.push_back(erase_conjecture(decl, policy));
  } else {
    for (const auto& d :
         elaborate_subtype(std::get<Declaration::SubtypeDef>(decl.value))) {
      Declaration located = d;
      located.span = decl.span;
      erase_declaration(located, policy, out);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Policy

PerPolicy make_policy(const Theory& theory, bool collapse) {
  PerPolicy policy;
  policy.collapse = collapse;
  bool dependency_free = true;
  struct Shape {
    Name name;
    bool has_type = false;
    bool has_term = false;
  };
  std::vector<Shape> symbols;
  for (const auto& d : theory.declarations) {
    for (const auto& e : d.params())
      if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value);
          tv && !tv->kind.is_simple())
        dependency_free = false;
    if (!std::holds_alternative<Declaration::TypeSym>(d.value) &&
        !std::holds_alternative<Declaration::SubtypeDef>(d.value))
      continue;
    Shape s{d.name()};
    for (const auto& e : d.params()) {
      s.has_type |= e.is_type_var();
      s.has_term |= e.is_term_var();
    }
    if (s.has_term) dependency_free = false;
    symbols.push_back(s);
  }
  policy.type_vars_trivial = collapse && dependency_free;
  for (const auto& s : symbols)
    policy.trivial_symbols[s.name] =
        collapse && !s.has_term && (!s.has_type || policy.type_vars_trivial);
  return policy;
}

bool is_per_trivial(const TypeRef& type, const PerPolicy& policy) {
  if (std::holds_alternative<Type::Bool>(type->node)) return true;
  if (auto* b = std::get_if<Type::BaseApp>(&type->node)) {
    if (!trivial_symbol(b->symbol, policy)) return false;
    for (const auto& e : b->args)
      if (!e.is_type() || !is_per_trivial(e.type().body, policy)) return false;
    return true;
  }
  if (auto* v = std::get_if<Type::VarApp>(&type->node))
    return policy.type_vars_trivial && v->args.empty();
  const auto& p = std::get<Type::Pi>(type->node);
  return is_per_trivial(p.domain, policy) && is_per_trivial(p.codomain, policy);
}

Name per_name(const Name& symbol) { return Name{symbol.text + "_per"}; }

// ---------------------------------------------------------------------------
// Types and terms

TypeRef erase_type(const TypeRef& type) {
  if (std::holds_alternative<Type::Bool>(type->node)) return mk::boolean();
  if (auto* b = std::get_if<Type::BaseApp>(&type->node)) {
    Substitution args;
    for (const auto& e : b->args)
      if (e.is_type()) args.push_back(mk::type_arg(erase_type(e.type().body)));
    return mk::base(b->symbol, std::move(args));
  }
  if (auto* v = std::get_if<Type::VarApp>(&type->node))
    return mk::tvar(v->variable);
  const auto& p = std::get<Type::Pi>(type->node);
  return mk::arrow(erase_type(p.domain), erase_type(p.codomain));
}

TermRef erase_term(const TermRef& term, const PerPolicy& policy) {
  return std::visit(
      [&](const auto& n) -> TermRef {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Term::Const>) {
          auto [types, terms] = erase_args(n.args, policy);
          return mk::apps(mk::cnst(n.symbol, std::move(types)), terms);
        } else if constexpr (std::is_same_v<N, Term::Var>) {
          return mk::var(n.name);
        } else if constexpr (std::is_same_v<N, Term::Lambda>) {
          return mk::lam(n.binder, erase_type(n.domain),
                         erase_term(n.body, policy));
        } else if constexpr (std::is_same_v<N, Term::App>) {
          return mk::app(erase_term(n.fun, policy), erase_term(n.arg, policy));
        } else if constexpr (std::is_same_v<N, Term::Implies>) {
          return mk::implies(erase_term(n.lhs, policy),
                             erase_term(n.rhs, policy));
        } else {
          if (!n.type) throw Error("erase_term: equality without a type annotation");
          // Under the optimization a quantifier over a non-trivial type is
          // translated to its guarded form instead of a PER on predicates.
          if (policy.collapse) {
            if (auto q = logic::match_forall(term);
                q && !is_per_trivial(q->type, policy)) {
              TermRef x = mk::var(q->binder);
              return logic::mk_forall(
                  q->binder, erase_type(q->type),
                  mk::implies(per_formula(q->type, x, x, policy),
                              erase_term(q->body, policy)));
            }
          }
          return per_formula(n.type, erase_term(n.lhs, policy),
                             erase_term(n.rhs, policy), policy);
        }
      },
      term->node);
}

TermRef per_formula(const TypeRef& type, const TermRef& lhs, const TermRef& rhs,
                    const PerPolicy& policy) {
  if (std::holds_alternative<Type::Bool>(type->node) || collapses(type, policy))
    return mk::eq(erase_type(type), lhs, rhs);
  if (auto* b = std::get_if<Type::BaseApp>(&type->node)) {
    auto [types, terms] = erase_args(b->args, policy);
    terms.push_back(lhs);
    terms.push_back(rhs);
    return mk::apps(mk::cnst(per_name(b->symbol), std::move(types)), terms);
  }
  if (auto* v = std::get_if<Type::VarApp>(&type->node)) {
    std::vector<TermRef> args;
    for (const auto& t : v->args) args.push_back(erase_term(t, policy));
    args.push_back(lhs);
    args.push_back(rhs);
    return mk::apps(mk::var(per_name(v->variable)), args);
  }

  const auto& p = std::get<Type::Pi>(type->node);
  bool named = !is_anonymous(p.binder);
  NameSet avoid = free_vars(lhs);
  collect_free_vars(rhs, avoid);
  collect_free_vars(p.domain, avoid);
  NameSet cod_fv = free_vars(p.codomain);
  if (named) cod_fv.erase(p.binder);
  avoid.insert(cod_fv.begin(), cod_fv.end());

  Name x = fresh_name(named ? p.binder : Name{"x"}, avoid);
  TypeRef cod = p.codomain;
  if (named && x != p.binder) {
    SubstMap m;
    m.bind_term(p.binder, mk::var(x));
    cod = substitute(cod, m);
  }
  avoid.insert(x);
  Name y = fresh_name("y", avoid);
  TypeRef dom = erase_type(p.domain);
  TermRef vx = mk::var(x);
  TermRef vy = mk::var(y);
  TermRef body = mk::implies(
      per_formula(p.domain, vx, vy, policy),
      per_formula(cod, apply_reducing(lhs, vx), apply_reducing(rhs, vy), policy));
  return logic::mk_forall(x, dom, logic::mk_forall(y, dom, body));
}

TermRef per_relation(const TypeRef& type, const PerPolicy& policy) {
  NameSet avoid = free_vars(type);
  Name x = fresh_name("x", avoid);
  avoid.insert(x);
  Name y = fresh_name("y", avoid);
  TermRef body = per_formula(type, mk::var(x), mk::var(y), policy);
  if (auto* outer = std::get_if<Term::App>(&body->node)) {
    if (auto* inner = std::get_if<Term::App>(&outer->fun->node)) {
      auto* a = std::get_if<Term::Var>(&inner->arg->node);
      auto* b = std::get_if<Term::Var>(&outer->arg->node);
      if (a && b && a->name == x && b->name == y &&
          !occurs_free(x, inner->fun) && !occurs_free(y, inner->fun))
        return inner->fun;
    }
  }
  TypeRef dom = erase_type(type);
  return mk::lam(x, dom, mk::lam(y, dom, body));
}

TermRef is_per(const TermRef& rel, const TypeRef& carrier) {
  NameSet avoid = free_vars(rel);
  Name x = fresh_name("x", avoid);
  avoid.insert(x);
  Name y = fresh_name("y", avoid);
  avoid.insert(y);
  Name z = fresh_name("z", avoid);
  auto r = [&](const Name& a, const Name& b) {
    return mk::apps(rel, {mk::var(a), mk::var(b)});
  };
  TermRef sym = logic::mk_foralls({{x, carrier}, {y, carrier}},
                                  mk::implies(r(x, y), r(y, x)));
  TermRef trans = logic::mk_foralls(
      {{x, carrier}, {y, carrier}, {z, carrier}},
      mk::implies(r(x, y), mk::implies(r(y, z), r(x, z))));
  return logic::mk_and(sym, trans);
}

// ---------------------------------------------------------------------------
// Contexts and substitutions

Context erase_context(const Context& ctx, const PerPolicy& policy) {
  Context out;
  for (const auto& e : ctx) {
    if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value)) {
      out.push_back(mk::type_var(tv->name));
      if (policy.type_vars_trivial) continue;
      TypeRef self = mk::tvar(tv->name);
      std::vector<TypeRef> doms;
      std::vector<Binding> binders;
      std::vector<TermRef> args;
      for (const auto& b : tv->kind.telescope) {
        TypeRef t = erase_type(b.type);
        doms.push_back(t);
        binders.push_back(Binding{b.name, t});
        args.push_back(mk::var(b.name));
      }
      doms.push_back(self);
      doms.push_back(self);
      Name per = per_name(tv->name);
      out.push_back(mk::term_var(per, mk::arrows(doms, mk::boolean())));
      out.push_back(mk::assumption(logic::mk_foralls(
          binders, is_per(mk::apps(mk::var(per), args), self))));
    } else if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value)) {
      out.push_back(mk::term_var(v->name, erase_type(v->type)));
      if (!collapses(v->type, policy)) {
        TermRef x = mk::var(v->name);
        out.push_back(mk::assumption(per_formula(v->type, x, x, policy)));
      }
    } else {
      out.push_back(mk::assumption(
          erase_term(std::get<ContextEntry::Assumption>(e.value).formula, policy)));
    }
  }
  return out;
}

Substitution erase_subst(const Substitution& delta, const Context& target,
                         const PerPolicy& policy) {
  if (delta.size() != target.size())
    throw Error("erase_subst: substitution does not match its target");
  Substitution out;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& e = delta[i];
    if (target[i].is_type_var()) {
      if (!e.is_type()) throw Error("erase_subst: expected a type substitute");
      out.push_back(mk::type_arg(erase_type(e.type().body)));
      if (policy.type_vars_trivial) continue;
      out.push_back(mk::term_arg(lambda_relation(e.type(), policy)));
      out.push_back(mk::check());
    } else if (auto* v = std::get_if<ContextEntry::TermVar>(&target[i].value)) {
      if (!e.is_term()) throw Error("erase_subst: expected a term substitute");
      out.push_back(mk::term_arg(erase_term(e.term(), policy)));
      if (!collapses(v->type, policy)) out.push_back(mk::check());
    } else {
      out.push_back(mk::check());
    }
  }
  return out;
}

TermRef bind_context(const Context& erased, const TermRef& body) {
  std::vector<Binding> binders;
  std::vector<TermRef> hyps;
  for (const auto& e : erased) {
    if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value))
      binders.push_back(Binding{v->name, v->type});
    else if (auto* a = std::get_if<ContextEntry::Assumption>(&e.value))
      hyps.push_back(a->formula);
  }
  return logic::mk_foralls(binders, logic::mk_implies_chain(hyps, body));
}

Context type_params(const Context& erased) {
  Context out;
  for (const auto& e : erased)
    if (e.is_type_var()) out.push_back(mk::type_var(*e.name()));
  return out;
}

// ---------------------------------------------------------------------------
// Theories

std::vector<Declaration> PholTheory::prefix(std::size_t n) const {
  std::vector<Declaration> out;
  for (std::size_t i = 0; i < declarations.size(); ++i)
    if (origin[i] < n) out.push_back(declarations[i]);
  return out;
}

PholTheory erase_theory(const Theory& theory, const PerPolicy& policy) {
  PholTheory out;
  for (std::size_t i = 0; i < theory.declarations.size(); ++i) {
    erase_declaration(theory.declarations[i], policy, out.declarations);
    out.origin.resize(out.declarations.size(), i);
  }
  return out;
}

Declaration erase_conjecture(const Declaration& conjecture,
                             const PerPolicy& policy) {
  const auto& c = std::get<Declaration::Conjecture>(conjecture.value);
  Context ctx = erase_context(c.params, policy);
  return Declaration{
      Declaration::Conjecture{c.label, type_params(ctx),
                              bind_context(ctx, erase_term(c.formula, policy))},
      conjecture.span};
}

Declaration erase_obligation(const Obligation& obligation,
                             const PerPolicy& policy) {
  Context ctx = erase_context(obligation.context, policy);
  return Declaration{
      Declaration::Conjecture{
          obligation.id, type_params(ctx),
          bind_context(ctx, erase_term(obligation.formula, policy))},
      obligation.provenance.span};
}

Declaration::SubtypeDef translate_subtype_definition(
    const Declaration::SubtypeDef& def, const PerPolicy& policy) {
  Context ctx = erase_context(def.params, policy);
  TermRef pred = erase_term(def.predicate, policy);
  TypeRef carrier = erase_type(def.carrier);
  NameSet avoid = free_vars(pred);
  collect_free_vars(def.carrier, avoid);
  Name u = fresh_name("u", avoid);
  TermRef vu = mk::var(u);
  TermRef guard =
      mk::lam(u, carrier, logic::mk_and(per_formula(def.carrier, vu, vu, policy),
                                        mk::app(pred, vu)));
  return Declaration::SubtypeDef{def.name, type_params(ctx), carrier, guard};
}

// ---------------------------------------------------------------------------
// PHOL fragment

std::optional<std::string> phol_violation(const TypeRef& type) {
  if (auto* b = std::get_if<Type::BaseApp>(&type->node)) {
    for (const auto& e : b->args) {
      if (!e.is_type())
        return "type symbol " + b->symbol.text + " applied to a term";
      if (!e.type().params.empty())
        return "dependent type argument to " + b->symbol.text;
      if (auto v = phol_violation(e.type().body)) return v;
    }
  } else if (auto* v = std::get_if<Type::VarApp>(&type->node)) {
    if (!v->args.empty())
      return "type variable " + v->variable.text + " applied to terms";
  } else if (auto* p = std::get_if<Type::Pi>(&type->node)) {
    if (!is_anonymous(p->binder) && occurs_free(p->binder, p->codomain))
      return "dependent function type over " + p->binder.text;
    if (auto v = phol_violation(p->domain)) return v;
    return phol_violation(p->codomain);
  }
  return std::nullopt;
}

std::optional<std::string> phol_violation(const TermRef& term) {
  return std::visit(
      [&](const auto& n) -> std::optional<std::string> {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Term::Const>) {
          for (const auto& e : n.args) {
            if (!e.is_type())
              return "constant " + n.symbol.text + " has a term substitute";
            if (!e.type().params.empty())
              return "dependent type argument to " + n.symbol.text;
            if (auto v = phol_violation(e.type().body)) return v;
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<N, Term::Var>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<N, Term::Lambda>) {
          if (auto v = phol_violation(n.domain)) return v;
          return phol_violation(n.body);
        } else if constexpr (std::is_same_v<N, Term::App>) {
          if (auto v = phol_violation(n.fun)) return v;
          return phol_violation(n.arg);
        } else if constexpr (std::is_same_v<N, Term::Implies>) {
          if (auto v = phol_violation(n.lhs)) return v;
          return phol_violation(n.rhs);
        } else {
          if (!n.type) return std::string("unannotated equality");
          if (auto v = phol_violation(n.type)) return v;
          if (auto v = phol_violation(n.lhs)) return v;
          return phol_violation(n.rhs);
        }
      },
      term->node);
}

std::optional<std::string> phol_violation(const Declaration& decl) {
  if (std::holds_alternative<Declaration::SubtypeDef>(decl.value))
    return "subtype definition " + decl.name().text + " was not elaborated";
  for (const auto& e : decl.params()) {
    auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value);
    if (!tv)
      return decl.name().text + " has a parameter that is not a type variable";
    if (!tv->kind.is_simple())
      return decl.name().text + " has a dependent type variable";
  }
  if (auto* c = std::get_if<Declaration::TermSym>(&decl.value))
    return phol_violation(c->type);
  if (auto* a = std::get_if<Declaration::Axiom>(&decl.value))
    return phol_violation(a->formula);
  if (auto* g = std::get_if<Declaration::Conjecture>(&decl.value))
    return phol_violation(g->formula);
  return std::nullopt;
}

std::optional<std::string> phol_violation(const std::vector<Declaration>& decls) {
  for (const auto& d : decls)
    if (auto v = phol_violation(d)) return d.name().text + ": " + *v;
  return std::nullopt;
}

}  // namespace pdhol

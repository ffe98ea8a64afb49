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

#include "pdhol/core/syntax.hpp"

#include <type_traits>

namespace pdhol {

const Name* ContextEntry::name() const {
  if (auto* tv = std::get_if<TypeVar>(&value)) return &tv->name;
  if (auto* v = std::get_if<TermVar>(&value)) return &v->name;
  return nullptr;
}

const Name& Declaration::name() const {
  return std::visit(
      [](const auto& d) -> const Name& {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, Axiom> || std::is_same_v<D, Conjecture>)
          return d.label;
        else
          return d.name;
      },
      value);
}

const Context& Declaration::params() const {
  return std::visit([](const auto& d) -> const Context& { return d.params; },
                    value);
}

namespace mk {

TypeRef boolean(SourceSpan span) {
  return std::make_shared<const Type>(Type{Type::Bool{}, std::move(span)});
}

TypeRef base(Name symbol, Substitution args, SourceSpan span) {
  return std::make_shared<const Type>(
      Type{Type::BaseApp{std::move(symbol), std::move(args)}, std::move(span)});
}

TypeRef tvar(Name variable, std::vector<TermRef> args, SourceSpan span) {
  return std::make_shared<const Type>(Type{
      Type::VarApp{std::move(variable), std::move(args)}, std::move(span)});
}

TypeRef pi(Name binder, TypeRef domain, TypeRef codomain, SourceSpan span) {
  return std::make_shared<const Type>(
      Type{Type::Pi{std::move(binder), std::move(domain), std::move(codomain)},
           std::move(span)});
}

TypeRef arrow(TypeRef domain, TypeRef codomain) {
  return pi(kAnonymousBinder, std::move(domain), std::move(codomain));
}

TypeRef arrows(const std::vector<TypeRef>& domains, TypeRef codomain) {
  TypeRef result = std::move(codomain);
  for (auto it = domains.rbegin(); it != domains.rend(); ++it)
    result = arrow(*it, result);
  return result;
}

TermRef cnst(Name symbol, Substitution args, SourceSpan span) {
  return std::make_shared<const Term>(
      Term{Term::Const{std::move(symbol), std::move(args)}, std::move(span)});
}

TermRef var(Name name, SourceSpan span) {
  return std::make_shared<const Term>(
      Term{Term::Var{std::move(name)}, std::move(span)});
}

TermRef lam(Name binder, TypeRef domain, TermRef body, SourceSpan span) {
  return std::make_shared<const Term>(
      Term{Term::Lambda{std::move(binder), std::move(domain), std::move(body)},
           std::move(span)});
}

TermRef app(TermRef fun, TermRef arg, SourceSpan span) {
  return std::make_shared<const Term>(
      Term{Term::App{std::move(fun), std::move(arg)}, std::move(span)});
}

TermRef apps(TermRef fun, const std::vector<TermRef>& args) {
  for (const auto& a : args) fun = app(fun, a);
  return fun;
}

TermRef implies(TermRef lhs, TermRef rhs, SourceSpan span) {
  return std::make_shared<const Term>(
      Term{Term::Implies{std::move(lhs), std::move(rhs)}, std::move(span)});
}

TermRef eq(TypeRef type, TermRef lhs, TermRef rhs, SourceSpan span) {
  return std::make_shared<const Term>(Term{
      Term::Eq{std::move(type), std::move(lhs), std::move(rhs)},
      std::move(span)});
}

SubstEntry type_arg(TypeRef type) {
  return SubstEntry{TypeLambda{{}, std::move(type)}};
}

SubstEntry type_arg(std::vector<Binding> params, TypeRef body) {
  return SubstEntry{TypeLambda{std::move(params), std::move(body)}};
}

SubstEntry term_arg(TermRef term) { return SubstEntry{std::move(term)}; }

SubstEntry check() { return SubstEntry{CheckMark{}}; }

ContextEntry type_var(Name name, Kind kind) {
  return ContextEntry{ContextEntry::TypeVar{std::move(name), std::move(kind)}};
}

ContextEntry term_var(Name name, TypeRef type) {
  return ContextEntry{ContextEntry::TermVar{std::move(name), std::move(type)}};
}

ContextEntry assumption(TermRef formula) {
  return ContextEntry{ContextEntry::Assumption{std::move(formula)}};
}

}  // namespace mk
}  // namespace pdhol

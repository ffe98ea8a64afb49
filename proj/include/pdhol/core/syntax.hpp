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

#ifndef PDHOL_CORE_SYNTAX_HPP_
#define PDHOL_CORE_SYNTAX_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pdhol {

// Raised on contract violations inside the pure core (arity mismatches,
// unbound variables in subst_apply, exhausted normalization budget).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Name {
  std::string text;

  Name() = default;
  Name(std::string t) : text(std::move(t)) {}  // NOLINT(runtime/explicit)
  Name(const char* t) : text(t) {}             // NOLINT(runtime/explicit)

  bool empty() const { return text.empty(); }
  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;
};

inline const std::string& to_string(const Name& n) { return n.text; }

struct SourceSpan {
  std::shared_ptr<const std::string> file;
  std::uint32_t line = 0;  // 1-based; 0 means "no location"
  std::uint32_t column = 0;
  std::uint32_t length = 0;

  bool valid() const { return line != 0; }
};

struct Type;
struct Term;
using TypeRef = std::shared_ptr<const Type>;
using TermRef = std::shared_ptr<const Term>;

// x : A, as used in Π telescopes of kinds and type-level lambdas.
struct Binding {
  Name name;
  TypeRef type;
};

// A type-level substitute λx̄:Ā. B; the non-dependent case has no params.
struct TypeLambda {
  std::vector<Binding> params;
  TypeRef body;
};

struct CheckMark {};

struct SubstEntry {
  std::variant<TypeLambda, TermRef, CheckMark> value;

  bool is_type() const { return std::holds_alternative<TypeLambda>(value); }
  bool is_term() const { return std::holds_alternative<TermRef>(value); }
  bool is_check() const { return std::holds_alternative<CheckMark>(value); }
  const TypeLambda& type() const { return std::get<TypeLambda>(value); }
  const TermRef& term() const { return std::get<TermRef>(value); }
};

using Substitution = std::vector<SubstEntry>;

struct Type {
  struct BaseApp {
    Name symbol;
    Substitution args;
  };
  struct VarApp {
    Name variable;
    std::vector<TermRef> args;
  };
  struct Pi {
    Name binder;
    TypeRef domain;
    TypeRef codomain;
  };
  struct Bool {};

  std::variant<BaseApp, VarApp, Pi, Bool> node;
  SourceSpan span;
};

struct Term {
  struct Const {
    Name symbol;
    Substitution args;
  };
  struct Var {
    Name name;
  };
  struct Lambda {
    Name binder;
    TypeRef domain;
    TermRef body;
  };
  struct App {
    TermRef fun;
    TermRef arg;
  };
  struct Implies {
    TermRef lhs;
    TermRef rhs;
  };
  struct Eq {
    TypeRef type;  // null until annotated by the checker or the user
    TermRef lhs;
    TermRef rhs;
  };

  std::variant<Const, Var, Lambda, App, Implies, Eq> node;
  SourceSpan span;
};

// Π x̄:Ā. type
struct Kind {
  std::vector<Binding> telescope;

  bool is_simple() const { return telescope.empty(); }
};

struct ContextEntry {
  struct TypeVar {
    Name name;
    Kind kind;
  };
  struct TermVar {
    Name name;
    TypeRef type;
  };
  struct Assumption {
    TermRef formula;
  };

  std::variant<TypeVar, TermVar, Assumption> value;

  bool is_type_var() const { return std::holds_alternative<TypeVar>(value); }
  bool is_term_var() const { return std::holds_alternative<TermVar>(value); }
  bool is_assumption() const {
    return std::holds_alternative<Assumption>(value);
  }
  // Declared name, or empty for assumptions.
  const Name* name() const;
};

using Context = std::vector<ContextEntry>;

struct Declaration {
  struct TypeSym {
    Name name;
    Context params;
  };
  struct TermSym {
    Name name;
    Context params;
    TypeRef type;
  };
  struct Axiom {
    Name label;
    Context params;
    TermRef formula;
  };
  struct SubtypeDef {
    Name name;
    Context params;
    TypeRef carrier;
    TermRef predicate;
  };
  struct Conjecture {
    Name label;
    Context params;
    TermRef formula;
  };

  std::variant<TypeSym, TermSym, Axiom, SubtypeDef, Conjecture> value;
  SourceSpan span;

  const Name& name() const;
  const Context& params() const;
};

struct Theory {
  std::vector<Declaration> declarations;
};

struct Problem {
  Theory theory;
  std::optional<Declaration> conjecture;  // always holds a Conjecture
};

// ---------------------------------------------------------------------------
// Builders. Spans default to "no location".

namespace mk {

TypeRef boolean(SourceSpan span = {});
TypeRef base(Name symbol, Substitution args = {}, SourceSpan span = {});
TypeRef tvar(Name variable, std::vector<TermRef> args = {},
             SourceSpan span = {});
TypeRef pi(Name binder, TypeRef domain, TypeRef codomain,
           SourceSpan span = {});
// Non-dependent arrow; the binder is the anonymous name "_".
TypeRef arrow(TypeRef domain, TypeRef codomain);
TypeRef arrows(const std::vector<TypeRef>& domains, TypeRef codomain);

TermRef cnst(Name symbol, Substitution args = {}, SourceSpan span = {});
TermRef var(Name name, SourceSpan span = {});
TermRef lam(Name binder, TypeRef domain, TermRef body, SourceSpan span = {});
TermRef app(TermRef fun, TermRef arg, SourceSpan span = {});
TermRef apps(TermRef fun, const std::vector<TermRef>& args);
TermRef implies(TermRef lhs, TermRef rhs, SourceSpan span = {});
TermRef eq(TypeRef type, TermRef lhs, TermRef rhs, SourceSpan span = {});

SubstEntry type_arg(TypeRef type);
SubstEntry type_arg(std::vector<Binding> params, TypeRef body);
SubstEntry term_arg(TermRef term);
SubstEntry check();

ContextEntry type_var(Name name, Kind kind = {});
ContextEntry term_var(Name name, TypeRef type);
ContextEntry assumption(TermRef formula);

}  // namespace mk

inline constexpr const char* kAnonymousBinder = "_";

}  // namespace pdhol

template <>
struct std::hash<pdhol::Name> {
  std::size_t operator()(const pdhol::Name& n) const noexcept {
    return std::hash<std::string>{}(n.text);
  }
};

#endif  // PDHOL_CORE_SYNTAX_HPP_

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

#include "pdhol/surface/printer.hpp"

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"

namespace pdhol {
namespace {

// Term precedence, loosest first. Operands printed below the level their
// position requires get parentheses.
enum Level {
  kBinder = 0,
  kImplies = 1,
  kOr = 2,
  kAnd = 3,
  kNot = 4,
  kEquation = 5,
  kApp = 6,
  kAtom = 7,
};

enum TypeLevel { kTArrow = 0, kTApp = 1, kTAtom = 2 };

std::string paren(const std::string& s, bool wrap) {
  return wrap ? "(" + s + ")" : s;
}

std::string type_str(const TypeRef& t, TypeLevel need);
std::string term_str(const TermRef& t, Level need);

std::string subst_args(const Substitution& args) {
  std::string out;
  for (const auto& e : args) {
    out += ' ';
    if (e.is_type()) {
      const TypeLambda& l = e.type();
      if (l.params.empty()) {
        out += type_str(l.body, kTAtom);
      } else {
        out += "(\\";
        for (const auto& p : l.params)
          out += "(" + p.name.text + " : " + type_str(p.type, kTArrow) + ")";
        out += ". " + type_str(l.body, kTArrow) + ")";
      }
    } else if (e.is_term()) {
      out += term_str(e.term(), kAtom);
    }
  }
  return out;
}

std::string type_str(const TypeRef& t, TypeLevel need) {
  if (std::holds_alternative<Type::Bool>(t->node)) return "o";
  if (auto* b = std::get_if<Type::BaseApp>(&t->node)) {
    if (b->args.empty()) return b->symbol.text;
    return paren(b->symbol.text + subst_args(b->args), need > kTApp);
  }
  if (auto* v = std::get_if<Type::VarApp>(&t->node)) {
    if (v->args.empty()) return v->variable.text;
    std::string s = v->variable.text;
    for (const auto& a : v->args) s += " " + term_str(a, kAtom);
    return paren(s, need > kTApp);
  }
  const auto& p = std::get<Type::Pi>(t->node);
  std::string s;
  if (p.binder.text == kAnonymousBinder || !occurs_free(p.binder, p.codomain))
    s = type_str(p.domain, kTApp) + " -> " + type_str(p.codomain, kTArrow);
  else
    s = "(" + p.binder.text + " : " + type_str(p.domain, kTArrow) + ") -> " +
        type_str(p.codomain, kTArrow);
  return paren(s, need > kTArrow);
}

std::string binder_group(const Name& x, const TypeRef& a) {
  return "(" + x.text + " : " + type_str(a, kTArrow) + ")";
}

std::string quantifier(const char* sym, const logic::Quantified& first,
                       bool exists) {
  std::string s = std::string(sym) + " " + binder_group(first.binder, first.type);
  TermRef body = first.body;
  for (;;) {
    auto q = exists ? logic::match_exists(body) : logic::match_forall(body);
    if (!q || logic::is_false(body)) break;
    s += " " + binder_group(q->binder, q->type);
    body = q->body;
  }
  return s + ". " + term_str(body, kBinder);
}

std::string term_str(const TermRef& t, Level need) {
  if (logic::is_true(t)) return "$true";
  if (logic::is_false(t)) return "$false";
  if (auto q = logic::match_forall(t))
    return paren(quantifier("!", *q, false), need > kBinder);
  if (auto q = logic::match_exists(t))
    return paren(quantifier("?", *q, true), need > kBinder);

  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Term::Const>) {
          if (n.args.empty()) return n.symbol.text;
          return paren(n.symbol.text + subst_args(n.args), need > kApp);
        } else if constexpr (std::is_same_v<N, Term::Var>) {
          return n.name.text;
        } else if constexpr (std::is_same_v<N, Term::Lambda>) {
          std::string s = "\\" + binder_group(n.binder, n.domain);
          TermRef body = n.body;
          while (auto* l = std::get_if<Term::Lambda>(&body->node)) {
            s += " " + binder_group(l->binder, l->domain);
            body = l->body;
          }
          s += ". " + term_str(body, kBinder);
          return paren(s, need > kBinder);
        } else if constexpr (std::is_same_v<N, Term::App>) {
          return paren(term_str(n.fun, kApp) + " " + term_str(n.arg, kAtom),
                       need > kApp);
        } else if constexpr (std::is_same_v<N, Term::Implies>) {
          if (auto pq = logic::match_and(t))
            return paren(term_str(pq->first, kAnd) + " & " +
                             term_str(pq->second, kNot),
                         need > kAnd);
          if (auto pq = logic::match_or(t))
            return paren(term_str(pq->first, kOr) + " | " +
                             term_str(pq->second, kAnd),
                         need > kOr);
          if (auto p = logic::match_not(t))
            return paren("~ " + term_str(*p, kNot), need > kNot);
          return paren(term_str(n.lhs, kOr) + " => " + term_str(n.rhs, kBinder),
                       need > kImplies);
        } else {
          if (auto pq = logic::match_iff(t))
            return paren(term_str(pq->first, kOr) + " <=> " +
                             term_str(pq->second, kBinder),
                         need > kImplies);
          std::string op =
              n.type ? " =[" + type_str(n.type, kTArrow) + "] " : " = ";
          return paren(term_str(n.lhs, kApp) + op + term_str(n.rhs, kApp),
                       need > kEquation);
        }
      },
      t->node);
}

std::string kind_str(const Kind& k) {
  std::string s;
  for (const auto& b : k.telescope)
    s += "(" + b.name.text + " : " + type_str(b.type, kTArrow) + ") -> ";
  return s + "Type";
}

std::string params_str(const Context& ctx) {
  std::string s;
  for (const auto& e : ctx) {
    if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value))
      s += " (" + tv->name.text + " : " + kind_str(tv->kind) + ")";
    else if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value))
      s += " (" + v->name.text + " : " + type_str(v->type, kTArrow) + ")";
    else
      s += " [" +
           term_str(std::get<ContextEntry::Assumption>(e.value).formula,
                    kBinder) +
           "]";
  }
  return s;
}

}  // namespace

std::string print_type(const TypeRef& type) { return type_str(type, kTArrow); }

std::string print_term(const TermRef& term) { return term_str(term, kBinder); }

std::string print_context(const Context& ctx) {
  std::string s = params_str(ctx);
  return s.empty() ? s : s.substr(1);
}

std::string print_declaration(const Declaration& decl) {
  return std::visit(
      [](const auto& d) -> std::string {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, Declaration::TypeSym>) {
          return "type " + d.name.text + params_str(d.params) + ".";
        } else if constexpr (std::is_same_v<D, Declaration::TermSym>) {
          return "const " + d.name.text + params_str(d.params) + " : " +
                 print_type(d.type) + ".";
        } else if constexpr (std::is_same_v<D, Declaration::Axiom>) {
          return "axiom " + d.label.text + params_str(d.params) + " : " +
                 print_term(d.formula) + ".";
        } else if constexpr (std::is_same_v<D, Declaration::SubtypeDef>) {
          return "subtype " + d.name.text + params_str(d.params) + " := " +
                 print_type(d.carrier) + " | " + print_term(d.predicate) + ".";
        } else {
          return "conjecture " + d.label.text + params_str(d.params) + " : " +
                 print_term(d.formula) + ".";
        }
      },
      decl.value);
}

std::string print_surface(const Problem& problem) {
  std::string out;
  for (const auto& d : problem.theory.declarations)
    out += print_declaration(d) + "\n";
  if (problem.conjecture) out += print_declaration(*problem.conjecture) + "\n";
  return out;
}

}  // namespace pdhol

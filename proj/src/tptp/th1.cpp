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

#include "pdhol/tptp/th1.hpp"

#include <cstdio>

#include "pdhol/core/logic.hpp"
#include "pdhol/erasure/erasure.hpp"

namespace pdhol {
namespace {

bool plain(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool lower(char c) { return c >= 'a' && c <= 'z'; }
bool upper(char c) { return c >= 'A' && c <= 'Z'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::string hex(char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "_x%02X", static_cast<unsigned char>(c));
  return buf;
}

std::string escape(const std::string& s, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < s.size(); ++i) {
    char c = s[i];
    bool underscore_x = c == '_' && i + 1 < s.size() && s[i + 1] == 'x';
    out += plain(c) && !underscore_x ? std::string(1, c) : hex(c);
  }
  return out;
}

}  // namespace

std::string mangle(const Name& name, NameRole role) {
  const std::string& s = name.text;
  if (s.empty()) return role == NameRole::kConstant ? "c_xx" : "V_xx";
  char c = s[0];
  if (role == NameRole::kConstant) {
    if (lower(c)) return escape(s);
    if (digit(c) || upper(c)) return "c" + hex(c) + escape(s, 1);
    return "c_xx" + escape(s);
  }
  if (upper(c) && c != 'V') return escape(s);
  return "V" + escape(s);
}

namespace {

std::string type_str(const TypeRef& t);

std::string type_app(const Name& head, const Substitution& args) {
  std::string out = "(" + mangle(head, NameRole::kConstant);
  for (const auto& e : args) {
    if (!e.is_type() || !e.type().params.empty())
      throw Error("TH1 emission: dependent argument to " + head.text);
    out += " @ " + type_str(e.type().body);
  }
  return out + ")";
}

std::string type_str(const TypeRef& t) {
  if (std::holds_alternative<Type::Bool>(t->node)) return "$o";
  if (auto* b = std::get_if<Type::BaseApp>(&t->node)) {
    if (b->args.empty()) return mangle(b->symbol, NameRole::kConstant);
    return type_app(b->symbol, b->args);
  }
  if (auto* v = std::get_if<Type::VarApp>(&t->node)) {
    if (!v->args.empty())
      throw Error("TH1 emission: type variable applied to terms");
    return mangle(v->variable, NameRole::kVariable);
  }
  std::string out = "(";
  TypeRef cur = t;
  while (auto* p = std::get_if<Type::Pi>(&cur->node)) {
    out += type_str(p->domain) + " > ";
    cur = p->codomain;
  }
  return out + type_str(cur) + ")";
}

std::string binder(const Name& x, const TypeRef& a) {
  return mangle(x, NameRole::kVariable) + ": " + type_str(a);
}

std::string term_str(const TermRef& t);

std::string quantifier(const char* sym, logic::Quantified q, bool exists) {
  std::string out = std::string("(") + sym + "[" + binder(q.binder, q.type);
  TermRef body = q.body;
  for (;;) {
    if (logic::is_false(body) || logic::is_true(body)) break;
    auto next = exists ? logic::match_exists(body) : logic::match_forall(body);
    if (!next) break;
    out += ", " + binder(next->binder, next->type);
    body = next->body;
  }
  return out + "]: " + term_str(body) + ")";
}

std::string term_str(const TermRef& t) {
  if (logic::is_true(t)) return "$true";
  if (logic::is_false(t)) return "$false";
  if (auto q = logic::match_forall(t)) return quantifier("!", *q, false);
  if (auto q = logic::match_exists(t)) return quantifier("?", *q, true);

  return std::visit(
      [&](const auto& n) -> std::string {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Term::Const>) {
          if (n.args.empty()) return mangle(n.symbol, NameRole::kConstant);
          return type_app(n.symbol, n.args);
        } else if constexpr (std::is_same_v<N, Term::Var>) {
          return mangle(n.name, NameRole::kVariable);
        } else if constexpr (std::is_same_v<N, Term::Lambda>) {
          std::string out = "(^[" + binder(n.binder, n.domain);
          TermRef body = n.body;
          while (auto* l = std::get_if<Term::Lambda>(&body->node)) {
            out += ", " + binder(l->binder, l->domain);
            body = l->body;
          }
          return out + "]: " + term_str(body) + ")";
        } else if constexpr (std::is_same_v<N, Term::App>) {
          std::vector<const TermRef*> args{&n.arg};
          TermRef head = n.fun;
          while (auto* a = std::get_if<Term::App>(&head->node)) {
            args.push_back(&a->arg);
            head = a->fun;
          }
          std::string out = "(" + term_str(head);
          // c @ T̄ applied further is written as one application chain.
          if (auto* c = std::get_if<Term::Const>(&head->node); c && !c->args.empty())
            out = type_app(c->symbol, c->args), out.pop_back();
          for (auto it = args.rbegin(); it != args.rend(); ++it)
            out += " @ " + term_str(**it);
          return out + ")";
        } else if constexpr (std::is_same_v<N, Term::Implies>) {
          if (auto pq = logic::match_and(t))
            return "(" + term_str(pq->first) + " & " + term_str(pq->second) + ")";
          if (auto pq = logic::match_or(t))
            return "(" + term_str(pq->first) + " | " + term_str(pq->second) + ")";
          if (auto p = logic::match_not(t)) return "(~ " + term_str(*p) + ")";
          return "(" + term_str(n.lhs) + " => " + term_str(n.rhs) + ")";
        } else {
          if (!n.type) throw Error("TH1 emission: unannotated equality");
          if (std::holds_alternative<Type::Bool>(n.type->node))
            return "(" + term_str(n.lhs) + " <=> " + term_str(n.rhs) + ")";
          return "(" + term_str(n.lhs) + " = " + term_str(n.rhs) + ")";
        }
      },
      t->node);
}

std::string type_binders(const Context& params) {
  if (params.empty()) return "";
  std::string out = "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += mangle(*params[i].name(), NameRole::kVariable) + ": $tType";
  }
  return out + "]: ";
}

std::string formula(const std::string& name, const char* role,
                    const std::string& body) {
  return "thf(" + name + ", " + role + ", " + body + ").\n";
}

std::string declaration(const Declaration& d) {
  if (auto v = phol_violation(d))
    throw Error("TH1 emission: " + d.name().text + ": " + *v);
  std::string binders = type_binders(d.params());
  if (auto* t = std::get_if<Declaration::TypeSym>(&d.value)) {
    std::string kind;
    for (std::size_t i = 0; i < t->params.size(); ++i) kind += "$tType > ";
    return formula(mangle(t->name, NameRole::kConstant) + "_type", "type",
                   mangle(t->name, NameRole::kConstant) + " : " + kind + "$tType");
  }
  if (auto* c = std::get_if<Declaration::TermSym>(&d.value)) {
    std::string ty = type_str(c->type);
    if (!binders.empty()) ty = "!>" + binders + ty;
    return formula(mangle(c->name, NameRole::kConstant) + "_type", "type",
                   mangle(c->name, NameRole::kConstant) + " : " + ty);
  }
  const char* role = std::holds_alternative<Declaration::Axiom>(d.value)
                         ? "axiom"
                         : "conjecture";
  const TermRef& f = std::holds_alternative<Declaration::Axiom>(d.value)
                         ? std::get<Declaration::Axiom>(d.value).formula
                         : std::get<Declaration::Conjecture>(d.value).formula;
  std::string body = term_str(f);
  if (!binders.empty()) body = "!" + binders + body;
  return formula(mangle(d.name(), NameRole::kConstant), role, body);
}

}  // namespace

std::string th1_type(const TypeRef& type) { return type_str(type); }

std::string th1_term(const TermRef& term) { return term_str(term); }

std::string emit_th1(const std::vector<Declaration>& theory,
                     const Declaration& goal,
                     const std::vector<std::string>& comments) {
  if (!std::holds_alternative<Declaration::Conjecture>(goal.value))
    throw Error("TH1 emission: goal is not a conjecture");
  std::string out;
  for (const auto& c : comments) out += "% " + c + "\n";
  for (const auto& d : theory) {
    if (std::holds_alternative<Declaration::Conjecture>(d.value))
      throw Error("TH1 emission: conjecture inside the theory");
    out += declaration(d);
  }
  out += declaration(goal);
  return out;
}

}  // namespace pdhol

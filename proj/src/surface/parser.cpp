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

#include "pdhol/surface/parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "pdhol/core/logic.hpp"
#include "surface/lexer.hpp"

namespace pdhol {
namespace {

using surface::Tok;
using surface::Token;

struct ParseError {
  Diagnostic diag;
};

bool is_upper_name(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) != 0;
}

struct SymbolInfo {
  bool is_type = false;
  Context params;
};

struct ScopeEntry {
  Name name;
  bool type_var = false;
  Kind kind;  // type variables only

  std::size_t arity() const { return kind.telescope.size(); }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  std::optional<Problem> run() {
    Problem problem;
    try {
      while (peek().kind != Tok::kEnd) {
        if (problem.conjecture)
          fail(peek().span, "the conjecture must be the last item");
        Declaration d = item();
        if (std::holds_alternative<Declaration::Conjecture>(d.value))
          problem.conjecture = std::move(d);
        else
          problem.theory.declarations.push_back(std::move(d));
      }
    } catch (const ParseError& e) {
      diags_.push_back(e.diag);
      return std::nullopt;
    }
    return problem;
  }

 private:
  // ---- token helpers ------------------------------------------------------

  const Token& peek(std::size_t k = 0) const {
    std::size_t j = std::min(pos_ + k, toks_.size() - 1);
    return toks_[j];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what = nullptr) {
    if (!at(k)) {
      std::string msg = std::string("expected ") + surface::describe(k);
      if (what) msg += std::string(" ") + what;
      msg += ", found " + found(peek());
      fail(peek().span, msg);
    }
    return next();
  }
  static std::string found(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return "'" + t.text + "'";
  }
  [[noreturn]] void fail(const SourceSpan& span, std::string msg) {
    SourceSpan s = span;
    // Clamp end-of-input positions onto the last real token.
    if (s.length == 0 && pos_ > 0 && peek().kind == Tok::kEnd)
      s = toks_[pos_ > 0 ? pos_ - 1 : 0].span;
    if (s.length == 0 && toks_.size() > 1) s = toks_[toks_.size() - 2].span;
    throw ParseError{Diagnostic{Severity::kError, std::move(msg), s}};
  }

  // ---- names and scopes ---------------------------------------------------

  void check_binding_name(const Token& t) {
    if (is_reserved_name(t.text))
      fail(t.span, "identifier '" + t.text +
                       "' uses a suffix reserved for generated names");
    if (symbols_.count(t.text))
      fail(t.span, "'" + t.text + "' is already declared as a symbol");
  }

  const ScopeEntry* lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name.text == name) return &*it;
    return nullptr;
  }

  void declare_symbol(const Token& t, SymbolInfo info) {
    if (is_reserved_name(t.text))
      fail(t.span, "identifier '" + t.text +
                       "' uses a suffix reserved for generated names");
    if (is_upper_name(t.text))
      fail(t.span, "declared names must not start with an upper-case letter");
    if (symbols_.count(t.text) || labels_.count(t.text))
      fail(t.span, "duplicate declaration '" + t.text + "'");
    symbols_.emplace(t.text, std::move(info));
  }

  void declare_label(const Token& t) {
    if (is_reserved_name(t.text))
      fail(t.span, "identifier '" + t.text +
                       "' uses a suffix reserved for generated names");
    if (symbols_.count(t.text) || labels_.count(t.text))
      fail(t.span, "duplicate declaration '" + t.text + "'");
    labels_.insert(t.text);
  }

  // ---- declarations -------------------------------------------------------

  Declaration item() {
    const Token& kw = next();
    SourceSpan span = kw.span;
    scope_.clear();
    switch (kw.kind) {
      case Tok::kKwType: {
        const Token& name = expect(Tok::kIdent, "after 'type'");
        Context params = parameters();
        expect(Tok::kDot, "at the end of the declaration");
        declare_symbol(name, SymbolInfo{true, params});
        return Declaration{Declaration::TypeSym{name.text, params}, span};
      }
      case Tok::kKwConst: {
        const Token& name = expect(Tok::kIdent, "after 'const'");
        Context params = parameters();
        expect(Tok::kColon, "before the constant's type");
        TypeRef type = parse_type();
        expect(Tok::kDot, "at the end of the declaration");
        declare_symbol(name, SymbolInfo{false, params});
        return Declaration{Declaration::TermSym{name.text, params, type}, span};
      }
      case Tok::kKwAxiom:
      case Tok::kKwConjecture: {
        const Token& label = expect(Tok::kIdent, "as the label");
        declare_label(label);
        Context params = parameters();
        expect(Tok::kColon, "before the formula");
        TermRef formula = form();
        expect(Tok::kDot, "at the end of the declaration");
        if (kw.kind == Tok::kKwAxiom)
          return Declaration{Declaration::Axiom{label.text, params, formula},
                             span};
        return Declaration{Declaration::Conjecture{label.text, params, formula},
                           span};
      }
      case Tok::kKwSubtype: {
        const Token& name = expect(Tok::kIdent, "after 'subtype'");
        Context params = parameters();
        expect(Tok::kAssign, "after the subtype parameters");
        TypeRef carrier = parse_type();
        expect(Tok::kOr, "between carrier and predicate");
        TermRef pred = form();
        expect(Tok::kDot, "at the end of the declaration");
        declare_symbol(name, SymbolInfo{true, params});
        symbols_.emplace(name.text + "_abs", SymbolInfo{false, params});
        symbols_.emplace(name.text + "_rep", SymbolInfo{false, params});
        return Declaration{
            Declaration::SubtypeDef{name.text, params, carrier, pred}, span};
      }
      default:
        fail(kw.span, "expected a declaration ('type', 'const', 'axiom', "
                      "'subtype' or 'conjecture'), found " + found(kw));
    }
  }

  Context parameters() {
    Context params;
    while (at(Tok::kLParen)) {
      next();
      const Token& name = expect(Tok::kIdent, "as parameter name");
      check_binding_name(name);
      if (lookup(name.text))
        fail(name.span, "parameter '" + name.text + "' is declared twice");
      expect(Tok::kColon, "after the parameter name");
      if (is_upper_name(name.text)) {
        Kind k = kind();
        scope_.push_back(ScopeEntry{name.text, true, k});
        params.push_back(mk::type_var(name.text, std::move(k)));
      } else {
        if (at(Tok::kKwTypeKind))
          fail(peek().span, "type variables must start with an upper-case "
                            "letter");
        TypeRef t = parse_type();
        scope_.push_back(ScopeEntry{name.text, false, {}});
        params.push_back(mk::term_var(name.text, t));
      }
      expect(Tok::kRParen, "after the parameter");
    }
    return params;
  }

  Kind kind() {
    Kind k;
    std::size_t mark = scope_.size();
    while (!accept(Tok::kKwTypeKind)) {
      expect(Tok::kLParen, "or 'Type' in a kind");
      const Token& x = expect(Tok::kIdent, "as kind parameter");
      check_binding_name(x);
      if (is_upper_name(x.text))
        fail(x.span, "kinds may only bind term variables");
      expect(Tok::kColon);
      TypeRef t = parse_type();
      expect(Tok::kRParen);
      expect(Tok::kArrow, "in a kind");
      k.telescope.push_back(Binding{x.text, t});
      scope_.push_back(ScopeEntry{x.text, false, {}});
    }
    scope_.resize(mark);
    return k;
  }

  // ---- types --------------------------------------------------------------

  bool at_dependent_binder() const {
    return at(Tok::kLParen) && peek(1).kind == Tok::kIdent &&
           !is_upper_name(peek(1).text) && peek(2).kind == Tok::kColon;
  }

  TypeRef parse_type() {
    if (at_dependent_binder()) {
      SourceSpan span = next().span;
      const Token& x = next();
      check_binding_name(x);
      expect(Tok::kColon);
      TypeRef dom = parse_type();
      expect(Tok::kRParen);
      expect(Tok::kArrow, "after a dependent binder");
      scope_.push_back(ScopeEntry{x.text, false, {}});
      TypeRef cod = parse_type();
      scope_.pop_back();
      return mk::pi(x.text, dom, cod, span);
    }
    TypeRef lhs = type_app();
    if (accept(Tok::kArrow)) return mk::arrow(lhs, parse_type());
    return lhs;
  }

  TypeRef type_app() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent) {
      next();
      if (is_upper_name(t.text)) {
        const ScopeEntry* e = lookup(t.text);
        if (!e || !e->type_var)
          fail(t.span, "unknown type variable '" + t.text + "'");
        std::vector<TermRef> args;
        for (std::size_t k = 0; k < e->arity(); ++k) args.push_back(atom());
        return mk::tvar(t.text, std::move(args), t.span);
      }
      const SymbolInfo& s = type_symbol(t);
      return mk::base(t.text, arguments(s.params), t.span);
    }
    return atomic_type();
  }

  const SymbolInfo& type_symbol(const Token& t) {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end() || !it->second.is_type)
      fail(t.span, "unknown type '" + t.text + "'");
    return it->second;
  }

  TypeRef atomic_type() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kKwBool:
        next();
        return mk::boolean(t.span);
      case Tok::kLParen: {
        next();
        TypeRef inner = parse_type();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kIdent: {
        next();
        if (is_upper_name(t.text)) {
          const ScopeEntry* e = lookup(t.text);
          if (!e || !e->type_var)
            fail(t.span, "unknown type variable '" + t.text + "'");
          if (e->arity() != 0)
            fail(t.span, "type variable '" + t.text + "' takes " +
                             std::to_string(e->arity()) +
                             " arguments; parenthesize the application");
          return mk::tvar(t.text, {}, t.span);
        }
        const SymbolInfo& s = type_symbol(t);
        if (!s.params.empty())
          fail(t.span, "type '" + t.text + "' takes " +
                           std::to_string(s.params.size()) +
                           " arguments; parenthesize the application");
        return mk::base(t.text, {}, t.span);
      }
      default:
        fail(t.span, "expected a type, found " + found(t));
    }
  }

  // Arguments for a symbol with parameter list `tele`.
  Substitution arguments(const Context& tele) {
    Substitution out;
    for (const auto& p : tele) {
      if (auto* tv = std::get_if<ContextEntry::TypeVar>(&p.value)) {
        if (tv->kind.is_simple())
          out.push_back(mk::type_arg(atomic_type()));
        else
          out.push_back(type_lambda(tv->kind));
      } else if (p.is_term_var()) {
        out.push_back(mk::term_arg(atom()));
      } else {
        fail(peek().span, "symbols cannot take assumption arguments");
      }
    }
    return out;
  }

  // (\(x:A) (y:B). T)  or a bare kinded type variable, which is η-expanded.
  SubstEntry type_lambda(const Kind& kind) {
    const Token& t = peek();
    if (t.kind == Tok::kIdent && is_upper_name(t.text)) {
      next();
      const ScopeEntry* e = lookup(t.text);
      if (!e || !e->type_var)
        fail(t.span, "unknown type variable '" + t.text + "'");
      if (e->arity() != kind.telescope.size())
        fail(t.span, "type variable '" + t.text + "' has the wrong kind "
                     "for this argument");
      std::vector<TermRef> args;
      for (const auto& b : e->kind.telescope) args.push_back(mk::var(b.name));
      return mk::type_arg(e->kind.telescope,
                          mk::tvar(t.text, std::move(args), t.span));
    }
    expect(Tok::kLParen, "around a type-level lambda");
    expect(Tok::kLambda, "for an argument of a dependent kind");
    std::vector<Binding> params;
    std::size_t mark = scope_.size();
    do {
      expect(Tok::kLParen);
      const Token& x = expect(Tok::kIdent, "as lambda parameter");
      check_binding_name(x);
      if (is_upper_name(x.text))
        fail(x.span, "type-level lambdas bind term variables only");
      expect(Tok::kColon);
      TypeRef a = parse_type();
      expect(Tok::kRParen);
      params.push_back(Binding{x.text, a});
      scope_.push_back(ScopeEntry{x.text, false, {}});
    } while (at(Tok::kLParen));
    expect(Tok::kDot);
    TypeRef body = parse_type();
    scope_.resize(mark);
    expect(Tok::kRParen);
    return mk::type_arg(std::move(params), body);
  }

  // ---- terms --------------------------------------------------------------

  TermRef form() {
    if (at(Tok::kLambda) || at(Tok::kForall) || at(Tok::kExists))
      return binder();
    return implication();
  }

  TermRef binder() {
    const Token& b = next();
    std::vector<Binding> groups;
    std::size_t mark = scope_.size();
    do {
      expect(Tok::kLParen, "around a bound variable");
      const Token& x = expect(Tok::kIdent, "as bound variable");
      check_binding_name(x);
      if (is_upper_name(x.text))
        fail(x.span, "bound variables must start with a lower-case letter");
      expect(Tok::kColon);
      TypeRef a = parse_type();
      expect(Tok::kRParen);
      groups.push_back(Binding{x.text, a});
      scope_.push_back(ScopeEntry{x.text, false, {}});
    } while (at(Tok::kLParen));
    expect(Tok::kDot, "after the bound variables");
    TermRef body = form();
    scope_.resize(mark);
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      switch (b.kind) {
        case Tok::kLambda:
          body = mk::lam(it->name, it->type, body, b.span);
          break;
        case Tok::kForall:
          body = logic::mk_forall(it->name, it->type, body);
          break;
        default:
          body = logic::mk_exists(it->name, it->type, body);
          break;
      }
    }
    return body;
  }

  TermRef implication() {
    TermRef lhs = disjunction();
    if (at(Tok::kImplies)) {
      SourceSpan span = next().span;
      return mk::implies(lhs, form(), span);
    }
    if (accept(Tok::kIff)) return logic::mk_iff(lhs, form());
    return lhs;
  }

  TermRef disjunction() {
    TermRef lhs = conjunction();
    while (accept(Tok::kOr)) lhs = logic::mk_or(lhs, conjunction());
    return lhs;
  }

  TermRef conjunction() {
    TermRef lhs = negation();
    while (accept(Tok::kAnd)) lhs = logic::mk_and(lhs, negation());
    return lhs;
  }

  TermRef negation() {
    if (accept(Tok::kNot)) return logic::mk_not(negation());
    return equation();
  }

  TermRef equation() {
    TermRef lhs = application();
    if (at(Tok::kEq)) {
      SourceSpan span = next().span;
      return mk::eq(nullptr, lhs, application(), span);
    }
    if (at(Tok::kEqOpen)) {
      SourceSpan span = next().span;
      TypeRef a = parse_type();
      expect(Tok::kRBracket, "after the equality type");
      return mk::eq(a, lhs, application(), span);
    }
    return lhs;
  }

  bool at_atom_start() const {
    switch (peek().kind) {
      case Tok::kIdent:
      case Tok::kLParen:
      case Tok::kTrue:
      case Tok::kFalse:
      case Tok::kLambda:
      case Tok::kForall:
      case Tok::kExists:
        return true;
      default:
        return false;
    }
  }

  TermRef application() {
    TermRef head = applied_head();
    while (at_atom_start()) {
      bool binder_arg = at(Tok::kLambda) || at(Tok::kForall) || at(Tok::kExists);
      head = mk::app(head, atom(), head->span);
      if (binder_arg) break;
    }
    return head;
  }

  TermRef applied_head() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent && !is_upper_name(t.text) && !lookup(t.text)) {
      auto it = symbols_.find(t.text);
      if (it != symbols_.end() && !it->second.is_type) {
        next();
        return mk::cnst(t.text, arguments(it->second.params), t.span);
      }
    }
    return atom();
  }

  TermRef atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kTrue:
        next();
        return logic::mk_true();
      case Tok::kFalse:
        next();
        return logic::mk_false();
      case Tok::kLParen: {
        next();
        TermRef inner = form();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kLambda:
      case Tok::kForall:
      case Tok::kExists:
        return binder();
      case Tok::kIdent: {
        next();
        if (is_upper_name(t.text))
          fail(t.span, "type variable '" + t.text + "' used as a term");
        if (const ScopeEntry* e = lookup(t.text)) {
          if (e->type_var)
            fail(t.span, "type variable '" + t.text + "' used as a term");
          return mk::var(t.text, t.span);
        }
        auto it = symbols_.find(t.text);
        if (it == symbols_.end())
          fail(t.span, "unknown identifier '" + t.text + "'");
        if (it->second.is_type)
          fail(t.span, "type '" + t.text + "' used as a term");
        if (!it->second.params.empty())
          fail(t.span, "'" + t.text + "' takes " +
                           std::to_string(it->second.params.size()) +
                           " arguments; parenthesize the application");
        return mk::cnst(t.text, {}, t.span);
      }
      default:
        fail(t.span, "expected a term, found " + found(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
  std::map<std::string, SymbolInfo> symbols_;
  std::set<std::string> labels_;
  std::vector<ScopeEntry> scope_;
};

}  // namespace

bool is_reserved_name(std::string_view text) {
  while (!text.empty() && text.back() == '\'') text.remove_suffix(1);
  std::size_t start = text.find('_');
  while (start != std::string_view::npos) {
    std::size_t end = text.find('_', start + 1);
    std::string_view comp = text.substr(
        start + 1, end == std::string_view::npos ? std::string_view::npos
                                                 : end - start - 1);
    if (comp == "per" || comp == "abs" || comp == "rep") return true;
    if (comp.size() > 3 && comp.substr(0, 3) == "tco") {
      bool digits = true;
      for (char c : comp.substr(3))
        digits = digits && std::isdigit(static_cast<unsigned char>(c)) != 0;
      if (digits) return true;
    }
    start = end;
  }
  return false;
}

ParseResult parse_problem(std::string_view source,
                          const std::string& file_label) {
  ParseResult result;
  auto file = std::make_shared<const std::string>(file_label);
  std::vector<surface::Token> toks = surface::lex(source, file, result.diagnostics);
  if (has_errors(result.diagnostics)) return result;
  Parser parser(std::move(toks), result.diagnostics);
  result.problem = parser.run();
  return result;
}

}  // namespace pdhol

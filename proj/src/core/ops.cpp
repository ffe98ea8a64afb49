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

#include "pdhol/core/ops.hpp"

#include <algorithm>
#include <type_traits>

namespace pdhol {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Free variables

void collect_entry(const SubstEntry& e, NameSet& out);

void collect_lambda(const TypeLambda& lam, std::size_t i, NameSet& out) {
  if (i == lam.params.size()) {
    collect_free_vars(lam.body, out);
    return;
  }
  collect_free_vars(lam.params[i].type, out);
  NameSet inner;
  collect_lambda(lam, i + 1, inner);
  inner.erase(lam.params[i].name);
  out.insert(inner.begin(), inner.end());
}

void collect_entry(const SubstEntry& e, NameSet& out) {
  std::visit(Overloaded{
                 [&](const TypeLambda& l) { collect_lambda(l, 0, out); },
                 [&](const TermRef& t) { collect_free_vars(t, out); },
                 [&](const CheckMark&) {},
             },
             e.value);
}

}  // namespace

void collect_free_vars(const TypeRef& type, NameSet& out) {
  std::visit(Overloaded{
                 [&](const Type::BaseApp& b) {
                   for (const auto& e : b.args) collect_entry(e, out);
                 },
                 [&](const Type::VarApp& v) {
                   out.insert(v.variable);
                   for (const auto& a : v.args) collect_free_vars(a, out);
                 },
                 [&](const Type::Pi& p) {
                   collect_free_vars(p.domain, out);
                   NameSet inner;
                   collect_free_vars(p.codomain, inner);
                   inner.erase(p.binder);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const Type::Bool&) {},
             },
             type->node);
}

void collect_free_vars(const TermRef& term, NameSet& out) {
  std::visit(Overloaded{
                 [&](const Term::Const& c) {
                   for (const auto& e : c.args) collect_entry(e, out);
                 },
                 [&](const Term::Var& v) { out.insert(v.name); },
                 [&](const Term::Lambda& l) {
                   collect_free_vars(l.domain, out);
                   NameSet inner;
                   collect_free_vars(l.body, inner);
                   inner.erase(l.binder);
                   out.insert(inner.begin(), inner.end());
                 },
                 [&](const Term::App& a) {
                   collect_free_vars(a.fun, out);
                   collect_free_vars(a.arg, out);
                 },
                 [&](const Term::Implies& i) {
                   collect_free_vars(i.lhs, out);
                   collect_free_vars(i.rhs, out);
                 },
                 [&](const Term::Eq& e) {
                   if (e.type) collect_free_vars(e.type, out);
                   collect_free_vars(e.lhs, out);
                   collect_free_vars(e.rhs, out);
                 },
             },
             term->node);
}

NameSet free_vars(const TypeRef& type) {
  NameSet out;
  collect_free_vars(type, out);
  return out;
}

NameSet free_vars(const TermRef& term) {
  NameSet out;
  collect_free_vars(term, out);
  return out;
}

NameSet free_vars(const TypeLambda& lam) {
  NameSet out;
  collect_lambda(lam, 0, out);
  return out;
}

NameSet free_vars(const Substitution& subst) {
  NameSet out;
  for (const auto& e : subst) collect_entry(e, out);
  return out;
}

bool occurs_free(const Name& name, const TypeRef& type) {
  return free_vars(type).contains(name);
}

bool occurs_free(const Name& name, const TermRef& term) {
  return free_vars(term).contains(name);
}

Name fresh_name(const Name& base, const NameSet& avoid) {
  std::string text = base.text;
  while (avoid.contains(Name{text})) text += '\'';
  return Name{text};
}

// ---------------------------------------------------------------------------
// SubstMap

void SubstMap::bind_term(const Name& var, TermRef value) {
  types_.erase(var);
  terms_[var] = std::move(value);
}

void SubstMap::bind_type(const Name& var, TypeLambda value) {
  terms_.erase(var);
  types_[var] = std::move(value);
}

void SubstMap::erase(const Name& var) {
  terms_.erase(var);
  types_.erase(var);
}

const TermRef* SubstMap::term(const Name& var) const {
  auto it = terms_.find(var);
  return it == terms_.end() ? nullptr : &it->second;
}

const TypeLambda* SubstMap::type(const Name& var) const {
  auto it = types_.find(var);
  return it == types_.end() ? nullptr : &it->second;
}

NameSet SubstMap::range_free_vars() const {
  NameSet out;
  for (const auto& [_, t] : terms_) collect_free_vars(t, out);
  for (const auto& [_, l] : types_) {
    NameSet fv = free_vars(l);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Free variables of the substitutes for those map keys that occur in `fv`.
NameSet relevant_range(const SubstMap& map, const NameSet& fv) {
  NameSet out;
  for (const auto& x : fv) {
    if (const TermRef* t = map.term(x)) {
      collect_free_vars(*t, out);
    } else if (const TypeLambda* l = map.type(x)) {
      NameSet f = free_vars(*l);
      out.insert(f.begin(), f.end());
    }
  }
  return out;
}

// Prepares the map for descending under binder `x` whose scope has free
// variables `scope_fv`. Returns the (possibly renamed) binder.
Name enter_binder(const Name& x, const NameSet& scope_fv, SubstMap& inner) {
  inner.erase(x);
  if (inner.empty()) return x;
  NameSet range = relevant_range(inner, scope_fv);
  if (!range.contains(x)) return x;
  NameSet avoid = range;
  avoid.insert(scope_fv.begin(), scope_fv.end());
  Name renamed = fresh_name(x, avoid);
  inner.bind_term(x, mk::var(renamed));
  return renamed;
}

SubstEntry substitute_entry(const SubstEntry& e, const SubstMap& map) {
  return std::visit(
      Overloaded{
          [&](const TypeLambda& l) { return SubstEntry{substitute(l, map)}; },
          [&](const TermRef& t) { return SubstEntry{substitute(t, map)}; },
          [&](const CheckMark&) { return SubstEntry{CheckMark{}}; },
      },
      e.value);
}

void substitute_lambda(const TypeLambda& lam, std::size_t i,
                       const SubstMap& map, TypeLambda& out) {
  if (i == lam.params.size()) {
    out.body = substitute(lam.body, map);
    return;
  }
  const Binding& p = lam.params[i];
  TypeRef type = substitute(p.type, map);
  NameSet scope;
  for (std::size_t j = i + 1; j < lam.params.size(); ++j)
    collect_free_vars(lam.params[j].type, scope);
  collect_free_vars(lam.body, scope);
  SubstMap inner = map;
  Name binder = enter_binder(p.name, scope, inner);
  out.params.push_back(Binding{binder, type});
  substitute_lambda(lam, i + 1, inner, out);
}

}  // namespace

TypeLambda substitute(const TypeLambda& lam, const SubstMap& map) {
  if (map.empty()) return lam;
  TypeLambda out;
  substitute_lambda(lam, 0, map, out);
  return out;
}

Substitution substitute(const Substitution& subst, const SubstMap& map) {
  Substitution out;
  out.reserve(subst.size());
  for (const auto& e : subst) out.push_back(substitute_entry(e, map));
  return out;
}

TypeRef instantiate(const TypeLambda& lam, const std::vector<TermRef>& args) {
  if (lam.params.size() != args.size())
    throw Error("type-level substitute expects " +
                std::to_string(lam.params.size()) + " term arguments, got " +
                std::to_string(args.size()));
  if (args.empty()) return lam.body;
  SubstMap m;
  for (std::size_t i = 0; i < args.size(); ++i)
    m.bind_term(lam.params[i].name, args[i]);
  return substitute(lam.body, m);
}

TypeRef substitute(const TypeRef& type, const SubstMap& map) {
  if (map.empty()) return type;
  return std::visit(
      Overloaded{
          [&](const Type::BaseApp& b) {
            return mk::base(b.symbol, substitute(b.args, map), type->span);
          },
          [&](const Type::VarApp& v) {
            std::vector<TermRef> args;
            args.reserve(v.args.size());
            for (const auto& a : v.args) args.push_back(substitute(a, map));
            if (const TypeLambda* l = map.type(v.variable))
              return instantiate(*l, args);
            return mk::tvar(v.variable, std::move(args), type->span);
          },
          [&](const Type::Pi& p) {
            TypeRef dom = substitute(p.domain, map);
            SubstMap inner = map;
            Name binder = enter_binder(p.binder, free_vars(p.codomain), inner);
            return mk::pi(binder, dom, substitute(p.codomain, inner),
                          type->span);
          },
          [&](const Type::Bool&) { return type; },
      },
      type->node);
}

TermRef substitute(const TermRef& term, const SubstMap& map) {
  if (map.empty()) return term;
  return std::visit(
      Overloaded{
          [&](const Term::Const& c) {
            return mk::cnst(c.symbol, substitute(c.args, map), term->span);
          },
          [&](const Term::Var& v) {
            if (const TermRef* t = map.term(v.name)) return *t;
            return term;
          },
          [&](const Term::Lambda& l) {
            TypeRef dom = substitute(l.domain, map);
            SubstMap inner = map;
            Name binder = enter_binder(l.binder, free_vars(l.body), inner);
            return mk::lam(binder, dom, substitute(l.body, inner), term->span);
          },
          [&](const Term::App& a) {
            return mk::app(substitute(a.fun, map), substitute(a.arg, map),
                           term->span);
          },
          [&](const Term::Implies& i) {
            return mk::implies(substitute(i.lhs, map), substitute(i.rhs, map),
                               term->span);
          },
          [&](const Term::Eq& e) {
            return mk::eq(e.type ? substitute(e.type, map) : nullptr,
                          substitute(e.lhs, map), substitute(e.rhs, map),
                          term->span);
          },
      },
      term->node);
}

SubstMap make_subst_map(const Substitution& delta, const Context& domain) {
  if (delta.size() != domain.size())
    throw Error("substitution has " + std::to_string(delta.size()) +
                " entries but the context declares " +
                std::to_string(domain.size()));
  SubstMap m;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& entry = domain[i];
    const auto& sub = delta[i];
    if (auto* tv = std::get_if<ContextEntry::TypeVar>(&entry.value)) {
      if (!sub.is_type())
        throw Error("substitution entry " + std::to_string(i + 1) +
                    " must be a type for " + tv->name.text);
      if (sub.type().params.size() != tv->kind.telescope.size())
        throw Error("type substitute for " + tv->name.text + " binds " +
                    std::to_string(sub.type().params.size()) +
                    " term variables, kind expects " +
                    std::to_string(tv->kind.telescope.size()));
      m.bind_type(tv->name, sub.type());
    } else if (auto* v = std::get_if<ContextEntry::TermVar>(&entry.value)) {
      if (!sub.is_term())
        throw Error("substitution entry " + std::to_string(i + 1) +
                    " must be a term for " + v->name.text);
      m.bind_term(v->name, sub.term());
    } else if (!sub.is_check()) {
      throw Error("substitution entry " + std::to_string(i + 1) +
                  " must be a check mark for an assumption");
    }
  }
  return m;
}

namespace {

void require_scoped(const NameSet& fv, const Context& domain) {
  NameSet declared;
  for (const auto& e : domain)
    if (const Name* n = e.name()) declared.insert(*n);
  for (const auto& x : fv)
    if (!declared.contains(x))
      throw Error("unmatched free variable " + x.text);
}

}  // namespace

TypeRef subst_apply(const TypeRef& type, const Substitution& delta,
                    const Context& domain) {
  SubstMap m = make_subst_map(delta, domain);
  require_scoped(free_vars(type), domain);
  return substitute(type, m);
}

TermRef subst_apply(const TermRef& term, const Substitution& delta,
                    const Context& domain) {
  SubstMap m = make_subst_map(delta, domain);
  require_scoped(free_vars(term), domain);
  return substitute(term, m);
}

Substitution identity_substitution(const Context& context) {
  Substitution out;
  for (const auto& e : context) {
    if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value)) {
      std::vector<TermRef> args;
      for (const auto& b : tv->kind.telescope) args.push_back(mk::var(b.name));
      out.push_back(
          mk::type_arg(tv->kind.telescope, mk::tvar(tv->name, std::move(args))));
    } else if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value)) {
      out.push_back(mk::term_arg(mk::var(v->name)));
    } else {
      out.push_back(mk::check());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace {

class AlphaEq {
 public:
  bool type(const TypeRef& a, const TypeRef& b) {
    if (a == b && left_.empty() && right_.empty()) return true;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        Overloaded{
            [&](const Type::BaseApp& x) {
              const auto& y = std::get<Type::BaseApp>(b->node);
              return x.symbol == y.symbol && subst(x.args, y.args);
            },
            [&](const Type::VarApp& x) {
              const auto& y = std::get<Type::VarApp>(b->node);
              if (!var(x.variable, y.variable) ||
                  x.args.size() != y.args.size())
                return false;
              for (std::size_t i = 0; i < x.args.size(); ++i)
                if (!term(x.args[i], y.args[i])) return false;
              return true;
            },
            [&](const Type::Pi& x) {
              const auto& y = std::get<Type::Pi>(b->node);
              if (!type(x.domain, y.domain)) return false;
              push(x.binder, y.binder);
              bool r = type(x.codomain, y.codomain);
              pop();
              return r;
            },
            [&](const Type::Bool&) { return true; },
        },
        a->node);
  }

  bool term(const TermRef& a, const TermRef& b) {
    if (a == b && left_.empty() && right_.empty()) return true;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        Overloaded{
            [&](const Term::Const& x) {
              const auto& y = std::get<Term::Const>(b->node);
              return x.symbol == y.symbol && subst(x.args, y.args);
            },
            [&](const Term::Var& x) {
              return var(x.name, std::get<Term::Var>(b->node).name);
            },
            [&](const Term::Lambda& x) {
              const auto& y = std::get<Term::Lambda>(b->node);
              if (!type(x.domain, y.domain)) return false;
              push(x.binder, y.binder);
              bool r = term(x.body, y.body);
              pop();
              return r;
            },
            [&](const Term::App& x) {
              const auto& y = std::get<Term::App>(b->node);
              return term(x.fun, y.fun) && term(x.arg, y.arg);
            },
            [&](const Term::Implies& x) {
              const auto& y = std::get<Term::Implies>(b->node);
              return term(x.lhs, y.lhs) && term(x.rhs, y.rhs);
            },
            [&](const Term::Eq& x) {
              const auto& y = std::get<Term::Eq>(b->node);
              if (static_cast<bool>(x.type) != static_cast<bool>(y.type))
                return false;
              if (x.type && !type(x.type, y.type)) return false;
              return term(x.lhs, y.lhs) && term(x.rhs, y.rhs);
            },
        },
        a->node);
  }

  bool lambda(const TypeLambda& a, const TypeLambda& b) {
    if (a.params.size() != b.params.size()) return false;
    std::size_t pushed = 0;
    bool ok = true;
    for (std::size_t i = 0; i < a.params.size() && ok; ++i) {
      ok = type(a.params[i].type, b.params[i].type);
      push(a.params[i].name, b.params[i].name);
      ++pushed;
    }
    ok = ok && type(a.body, b.body);
    for (std::size_t i = 0; i < pushed; ++i) pop();
    return ok;
  }

  bool subst(const Substitution& a, const Substitution& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].value.index() != b[i].value.index()) return false;
      if (a[i].is_type() && !lambda(a[i].type(), b[i].type())) return false;
      if (a[i].is_term() && !term(a[i].term(), b[i].term())) return false;
    }
    return true;
  }

  // Compares two contexts entry-wise and leaves their variables bound, so
  // that expressions compared afterwards see the pairing.
  bool context(const Context& a, const Context& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& x = a[i].value;
      const auto& y = b[i].value;
      if (x.index() != y.index()) return false;
      if (auto* tx = std::get_if<ContextEntry::TypeVar>(&x)) {
        const auto& ty = std::get<ContextEntry::TypeVar>(y);
        if (!lambda(TypeLambda{tx->kind.telescope, mk::boolean()},
                    TypeLambda{ty.kind.telescope, mk::boolean()}))
          return false;
        push(tx->name, ty.name);
      } else if (auto* vx = std::get_if<ContextEntry::TermVar>(&x)) {
        const auto& vy = std::get<ContextEntry::TermVar>(y);
        if (!type(vx->type, vy.type)) return false;
        push(vx->name, vy.name);
      } else {
        if (!term(std::get<ContextEntry::Assumption>(x).formula,
                  std::get<ContextEntry::Assumption>(y).formula))
          return false;
      }
    }
    return true;
  }

  void reset() {
    left_.clear();
    right_.clear();
  }

 private:
  void push(const Name& a, const Name& b) {
    left_.push_back(a);
    right_.push_back(b);
  }
  void pop() {
    left_.pop_back();
    right_.pop_back();
  }
  static int depth(const std::vector<Name>& stack, const Name& x) {
    for (std::size_t i = stack.size(); i-- > 0;)
      if (stack[i] == x) return static_cast<int>(stack.size() - i);
    return -1;
  }
  bool var(const Name& a, const Name& b) {
    int i = depth(left_, a);
    int j = depth(right_, b);
    if (i < 0 && j < 0) return a == b;
    return i == j;
  }

  std::vector<Name> left_;
  std::vector<Name> right_;
};

}  // namespace

bool alpha_eq(const TypeRef& a, const TypeRef& b) {
  return AlphaEq{}.type(a, b);
}

bool alpha_eq(const TermRef& a, const TermRef& b) {
  return AlphaEq{}.term(a, b);
}

bool alpha_eq(const TypeLambda& a, const TypeLambda& b) {
  return AlphaEq{}.lambda(a, b);
}

bool alpha_eq(const Substitution& a, const Substitution& b) {
  return AlphaEq{}.subst(a, b);
}

bool alpha_eq(const Context& a, const Context& b) {
  return AlphaEq{}.context(a, b);
}

bool alpha_eq(const Declaration& a, const Declaration& b) {
  if (a.value.index() != b.value.index() || a.name() != b.name()) return false;
  AlphaEq eq;
  if (!eq.context(a.params(), b.params())) return false;
  return std::visit(
      Overloaded{
          [&](const Declaration::TypeSym&) { return true; },
          [&](const Declaration::TermSym& x) {
            return eq.type(x.type,
                           std::get<Declaration::TermSym>(b.value).type);
          },
          [&](const Declaration::Axiom& x) {
            return eq.term(x.formula,
                           std::get<Declaration::Axiom>(b.value).formula);
          },
          [&](const Declaration::SubtypeDef& x) {
            const auto& y = std::get<Declaration::SubtypeDef>(b.value);
            return eq.type(x.carrier, y.carrier) &&
                   eq.term(x.predicate, y.predicate);
          },
          [&](const Declaration::Conjecture& x) {
            return eq.term(x.formula,
                           std::get<Declaration::Conjecture>(b.value).formula);
          },
      },
      a.value);
}

bool alpha_eq(const Problem& a, const Problem& b) {
  const auto& da = a.theory.declarations;
  const auto& db = b.theory.declarations;
  if (da.size() != db.size()) return false;
  for (std::size_t i = 0; i < da.size(); ++i)
    if (!alpha_eq(da[i], db[i])) return false;
  if (a.conjecture.has_value() != b.conjecture.has_value()) return false;
  return !a.conjecture || alpha_eq(*a.conjecture, *b.conjecture);
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

class Normalizer {
 public:
  explicit Normalizer(int budget) : budget_(budget) {}

  TermRef term(const TermRef& t) {
    return std::visit(
        Overloaded{
            [&](const Term::Const& c) {
              return mk::cnst(c.symbol, subst(c.args), t->span);
            },
            [&](const Term::Var&) { return t; },
            [&](const Term::Lambda& l) {
              TypeRef dom = type(l.domain);
              TermRef body = term(l.body);
              if (auto* a = std::get_if<Term::App>(&body->node)) {
                auto* v = std::get_if<Term::Var>(&a->arg->node);
                if (v && v->name == l.binder && !occurs_free(l.binder, a->fun)) {
                  tick();
                  return a->fun;
                }
              }
              return mk::lam(l.binder, dom, body, t->span);
            },
            [&](const Term::App& a) {
              TermRef fun = term(a.fun);
              if (auto* l = std::get_if<Term::Lambda>(&fun->node)) {
                tick();
                SubstMap m;
                m.bind_term(l->binder, a.arg);
                return term(substitute(l->body, m));
              }
              return mk::app(fun, term(a.arg), t->span);
            },
            [&](const Term::Implies& i) {
              return mk::implies(term(i.lhs), term(i.rhs), t->span);
            },
            [&](const Term::Eq& e) {
              return mk::eq(e.type ? type(e.type) : nullptr, term(e.lhs),
                            term(e.rhs), t->span);
            },
        },
        t->node);
  }

  TypeRef type(const TypeRef& t) {
    return std::visit(
        Overloaded{
            [&](const Type::BaseApp& b) {
              return mk::base(b.symbol, subst(b.args), t->span);
            },
            [&](const Type::VarApp& v) {
              std::vector<TermRef> args;
              for (const auto& a : v.args) args.push_back(term(a));
              return mk::tvar(v.variable, std::move(args), t->span);
            },
            [&](const Type::Pi& p) {
              return mk::pi(p.binder, type(p.domain), type(p.codomain),
                            t->span);
            },
            [&](const Type::Bool&) { return t; },
        },
        t->node);
  }

 private:
  Substitution subst(const Substitution& s) {
    Substitution out;
    for (const auto& e : s) {
      if (e.is_type()) {
        TypeLambda l;
        for (const auto& p : e.type().params)
          l.params.push_back(Binding{p.name, type(p.type)});
        l.body = type(e.type().body);
        out.push_back(SubstEntry{std::move(l)});
      } else if (e.is_term()) {
        out.push_back(mk::term_arg(term(e.term())));
      } else {
        out.push_back(mk::check());
      }
    }
    return out;
  }

  void tick() {
    if (--budget_ < 0) throw Error("normalization budget exceeded");
  }

  int budget_;
};

}  // namespace

TermRef normalize(const TermRef& term, int budget) {
  return Normalizer{budget}.term(term);
}

TypeRef normalize(const TypeRef& type, int budget) {
  return Normalizer{budget}.type(type);
}

TermRef apply_reducing(const TermRef& fun, const TermRef& arg) {
  if (auto* l = std::get_if<Term::Lambda>(&fun->node)) {
    SubstMap m;
    m.bind_term(l->binder, arg);
    return substitute(l->body, m);
  }
  return mk::app(fun, arg);
}

}  // namespace pdhol

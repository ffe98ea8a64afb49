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

#include "pdhol/checker/checker.hpp"

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/core/subtype.hpp"
#include "pdhol/surface/printer.hpp"

namespace pdhol {

std::string Provenance::describe() const {
  std::string s = rule;
  if (!declaration.empty()) s += " in " + declaration.text;
  if (span.valid()) {
    s += " at ";
    if (span.file) s += *span.file + ":";
    s += std::to_string(span.line) + ":" + std::to_string(span.column);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Signature

Signature Signature::from_theory(const Theory& theory) {
  Signature sig;
  for (std::size_t i = 0; i < theory.declarations.size(); ++i)
    sig.add(theory.declarations[i], i);
  return sig;
}

void Signature::add(const Declaration& decl, std::size_t decl_index) {
  if (auto* t = std::get_if<Declaration::TypeSym>(&decl.value)) {
    symbols_[t->name] = Symbol{true, t->params, nullptr, decl_index};
  } else if (auto* c = std::get_if<Declaration::TermSym>(&decl.value)) {
    symbols_[c->name] = Symbol{false, c->params, c->type, decl_index};
  } else if (auto* s = std::get_if<Declaration::SubtypeDef>(&decl.value)) {
    for (const auto& d : elaborate_subtype(*s))
      if (!std::holds_alternative<Declaration::Axiom>(d.value)) add(d, decl_index);
  } else {
    labels_[decl.name()] = decl_index;
  }
}

const Signature::Symbol* Signature::find(const Name& name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

bool Signature::contains(const Name& name) const {
  return symbols_.count(name) != 0 || labels_.count(name) != 0;
}

Name obligation_prefix(const Problem& problem) {
  if (problem.conjecture) return problem.conjecture->name();
  return Name{"problem"};
}

// ---------------------------------------------------------------------------
// Checker

namespace {

NameSet context_names(const Context& ctx) {
  NameSet out;
  for (const auto& e : ctx)
    if (const Name* n = e.name()) out.insert(*n);
  return out;
}

const ContextEntry* lookup(const Context& ctx, const Name& x) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
    if (const Name* n = it->name(); n && *n == x) return &*it;
  return nullptr;
}

Context extended(const Context& ctx, ContextEntry e) {
  Context out = ctx;
  out.push_back(std::move(e));
  return out;
}

bool is_anonymous(const Name& x) { return x.text == kAnonymousBinder; }

template <class T>
void append(std::vector<T>& dst, std::vector<T>&& src) {
  for (auto& x : src) dst.push_back(std::move(x));
}

bool same_normal_form(const TermRef& a, const TermRef& b) {
  if (alpha_eq(a, b)) return true;
  try {
    return alpha_eq(normalize(a), normalize(b));
  } catch (const Error&) {
    return false;
  }
}

class Checker {
 public:
  Checker(const Signature& sig, Name decl, std::size_t prefix, SourceSpan span)
      : sig_(sig), decl_(std::move(decl)), prefix_(prefix),
        fallback_(std::move(span)) {}

  // ---- types --------------------------------------------------------------

  CheckedType type(const Context& ctx, const TypeRef& a) {
    CheckedType out;
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Type::Bool>) {
            out.type = a;
          } else if constexpr (std::is_same_v<N, Type::BaseApp>) {
            const Signature::Symbol* s = sig_.find(n.symbol);
            if (!s || !s->is_type)
              fail(a->span, "unknown type symbol '" + n.symbol.text + "'");
            auto [args, obs] = subst(ctx, n.args, s->params, a->span);
            out.type = mk::base(n.symbol, std::move(args), a->span);
            out.obligations = std::move(obs);
          } else if constexpr (std::is_same_v<N, Type::VarApp>) {
            const ContextEntry* e = lookup(ctx, n.variable);
            auto* tv = e ? std::get_if<ContextEntry::TypeVar>(&e->value) : nullptr;
            if (!tv)
              fail(a->span, "unknown type variable '" + n.variable.text + "'");
            const auto& tele = tv->kind.telescope;
            if (tele.size() != n.args.size())
              fail(a->span, "type variable '" + n.variable.text + "' expects " +
                                std::to_string(tele.size()) + " arguments, got " +
                                std::to_string(n.args.size()));
            SubstMap m;
            std::vector<TermRef> args;
            for (std::size_t i = 0; i < tele.size(); ++i) {
              Typed t = check(ctx, n.args[i], substitute(tele[i].type, m));
              append(out.obligations, std::move(t.obligations));
              m.bind_term(tele[i].name, t.term);
              args.push_back(t.term);
            }
            out.type = mk::tvar(n.variable, std::move(args), a->span);
          } else {
            CheckedType dom = type(ctx, n.domain);
            append(out.obligations, std::move(dom.obligations));
            if (is_anonymous(n.binder)) {
              CheckedType cod = type(ctx, n.codomain);
              append(out.obligations, std::move(cod.obligations));
              out.type = mk::pi(n.binder, dom.type, cod.type, a->span);
              return;
            }
            auto [x, body] = open(ctx, n.binder, n.codomain);
            CheckedType cod = type(extended(ctx, mk::term_var(x, dom.type)), body);
            append(out.obligations, std::move(cod.obligations));
            out.type = mk::pi(x, dom.type, cod.type, a->span);
          }
        },
        a->node);
    return out;
  }

  // ---- terms --------------------------------------------------------------

  Typed infer(const Context& ctx, const TermRef& t) {
    Typed out;
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Term::Const>) {
            const Signature::Symbol* s = sig_.find(n.symbol);
            if (!s || s->is_type)
              fail(t->span, "unknown constant '" + n.symbol.text + "'");
            auto [args, obs] = subst(ctx, n.args, s->params, t->span);
            SubstMap m = make_subst_map(args, s->params);
            out.type = substitute(s->type, m);
            out.term = mk::cnst(n.symbol, std::move(args), t->span);
            out.obligations = std::move(obs);
          } else if constexpr (std::is_same_v<N, Term::Var>) {
            const ContextEntry* e = lookup(ctx, n.name);
            if (!e) fail(t->span, "unbound variable '" + n.name.text + "'");
            auto* v = std::get_if<ContextEntry::TermVar>(&e->value);
            if (!v)
              fail(t->span, "type variable '" + n.name.text + "' used as a term");
            out.term = t;
            out.type = v->type;
          } else if constexpr (std::is_same_v<N, Term::Lambda>) {
            CheckedType dom = type(ctx, n.domain);
            auto [x, body] = open(ctx, n.binder, n.body);
            Typed b = infer(extended(ctx, mk::term_var(x, dom.type)), body);
            out.obligations = std::move(dom.obligations);
            append(out.obligations, std::move(b.obligations));
            out.term = mk::lam(x, dom.type, b.term, t->span);
            out.type = mk::pi(x, dom.type, b.type);
          } else if constexpr (std::is_same_v<N, Term::App>) {
            Typed f = infer(ctx, n.fun);
            auto* pi = std::get_if<Type::Pi>(&f.type->node);
            if (!pi)
              fail(t->span, "cannot apply a term of non-function type " +
                                print_type(f.type));
            Typed u = check(ctx, n.arg, pi->domain);
            out.obligations = std::move(f.obligations);
            append(out.obligations, std::move(u.obligations));
            out.term = mk::app(f.term, u.term, t->span);
            if (is_anonymous(pi->binder)) {
              out.type = pi->codomain;
            } else {
              SubstMap m;
              m.bind_term(pi->binder, u.term);
              out.type = substitute(pi->codomain, m);
            }
          } else if constexpr (std::is_same_v<N, Term::Implies>) {
            Typed p = check(ctx, n.lhs, mk::boolean());
            Typed q = check(extended(ctx, mk::assumption(p.term)), n.rhs,
                            mk::boolean());
            out.obligations = std::move(p.obligations);
            append(out.obligations, std::move(q.obligations));
            out.term = mk::implies(p.term, q.term, t->span);
            out.type = mk::boolean();
          } else {
            TypeRef a;
            Typed lhs;
            if (n.type) {
              CheckedType ann = type(ctx, n.type);
              out.obligations = std::move(ann.obligations);
              a = ann.type;
              lhs = check(ctx, n.lhs, a);
            } else {
              lhs = infer(ctx, n.lhs);
              a = lhs.type;
            }
            Typed rhs = check(ctx, n.rhs, a);
            append(out.obligations, std::move(lhs.obligations));
            append(out.obligations, std::move(rhs.obligations));
            out.term = mk::eq(a, lhs.term, rhs.term, t->span);
            out.type = mk::boolean();
          }
        },
        t->node);
    return out;
  }

  Typed check(const Context& ctx, const TermRef& t, const TypeRef& expected) {
    Typed out = infer(ctx, t);
    EqResult r = equal(ctx, out.type, expected, span_of(t->span));
    if (r.unequal())
      fail(t->span, "type mismatch: expected " + print_type(expected) +
                        ", found " + print_type(out.type) + " (" + r.reason +
                        ")");
    append(out.obligations, std::move(r.obligations));
    out.type = expected;
    return out;
  }

  // ---- contexts and substitutions ----------------------------------------

  CheckedContext context(const Context& ctx, const Context& local,
                         bool allow_assumptions) {
    CheckedContext out;
    Context full = ctx;
    for (const auto& e : local) {
      if (const Name* n = e.name(); n && lookup(full, *n))
        fail(fallback_, "'" + n->text + "' shadows an earlier declaration");
      if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value)) {
        Kind k;
        Context inner = full;
        for (const auto& b : tv->kind.telescope) {
          if (lookup(inner, b.name))
            fail(fallback_, "'" + b.name.text + "' shadows an earlier declaration");
          CheckedType bt = type(inner, b.type);
          append(out.obligations, std::move(bt.obligations));
          k.telescope.push_back(Binding{b.name, bt.type});
          inner.push_back(mk::term_var(b.name, bt.type));
        }
        ContextEntry entry = mk::type_var(tv->name, std::move(k));
        full.push_back(entry);
        out.context.push_back(std::move(entry));
      } else if (auto* v = std::get_if<ContextEntry::TermVar>(&e.value)) {
        CheckedType vt = type(full, v->type);
        append(out.obligations, std::move(vt.obligations));
        ContextEntry entry = mk::term_var(v->name, vt.type);
        full.push_back(entry);
        out.context.push_back(std::move(entry));
      } else {
        const auto& f = std::get<ContextEntry::Assumption>(e.value).formula;
        if (!allow_assumptions)
          fail(f->span, "assumptions are not allowed in a parameter list");
        Typed p = check(full, f, mk::boolean());
        append(out.obligations, std::move(p.obligations));
        ContextEntry entry = mk::assumption(p.term);
        full.push_back(entry);
        out.context.push_back(std::move(entry));
      }
    }
    return out;
  }

  std::pair<Substitution, std::vector<Obligation>> subst(
      const Context& ctx, const Substitution& delta, const Context& target,
      const SourceSpan& at) {
    if (delta.size() != target.size())
      fail(at, "expected " + std::to_string(target.size()) +
                   " arguments, got " + std::to_string(delta.size()));
    Substitution out;
    std::vector<Obligation> obs;
    SubstMap m;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      const auto& entry = target[i];
      const auto& sub = delta[i];
      std::string pos = "argument " + std::to_string(i + 1);
      if (auto* tv = std::get_if<ContextEntry::TypeVar>(&entry.value)) {
        if (!sub.is_type())
          fail(at, pos + " must be a type (for " + tv->name.text + ")");
        TypeLambda lam = type_lambda(ctx, sub.type(), tv->kind, m, at, obs);
        m.bind_type(tv->name, lam);
        out.push_back(SubstEntry{std::move(lam)});
      } else if (auto* v = std::get_if<ContextEntry::TermVar>(&entry.value)) {
        if (!sub.is_term())
          fail(at, pos + " must be a term (for " + v->name.text + ")");
        Typed t = check(ctx, sub.term(), substitute(v->type, m));
        append(obs, std::move(t.obligations));
        m.bind_term(v->name, t.term);
        out.push_back(mk::term_arg(t.term));
      } else {
        if (!sub.is_check()) fail(at, pos + " must be a check mark");
        const auto& phi = std::get<ContextEntry::Assumption>(entry.value).formula;
        obs.push_back(obligation(ctx, substitute(phi, m), "assumption", at));
        out.push_back(mk::check());
      }
    }
    return {std::move(out), std::move(obs)};
  }

  // ---- type equality ------------------------------------------------------

  EqResult equal(const Context& ctx, const TypeRef& a, const TypeRef& b,
                 const SourceSpan& at) {
    EqResult r;
    auto unequal = [&](std::string why) {
      EqResult u;
      u.kind = EqResult::Kind::kUnequal;
      u.reason = std::move(why);
      return u;
    };
    auto merge = [&](EqResult&& sub) -> bool {
      if (sub.unequal()) {
        r = std::move(sub);
        return false;
      }
      append(r.obligations, std::move(sub.obligations));
      return true;
    };
    auto compare_term = [&](const Context& c, const TypeRef& ty,
                            const TermRef& s, const TermRef& t) {
      if (same_normal_form(s, t)) return;
      r.obligations.push_back(obligation(c, mk::eq(ty, s, t), "type-equality", at));
    };

    if (a->node.index() != b->node.index())
      return unequal(print_type(a) + " and " + print_type(b) +
                     " have different shapes");

    if (std::holds_alternative<Type::Bool>(a->node)) return r;

    if (auto* x = std::get_if<Type::VarApp>(&a->node)) {
      const auto& y = std::get<Type::VarApp>(b->node);
      if (x->variable != y.variable)
        return unequal("different type variables " + x->variable.text + " and " +
                       y.variable.text);
      const ContextEntry* e = lookup(ctx, x->variable);
      auto* tv = e ? std::get_if<ContextEntry::TypeVar>(&e->value) : nullptr;
      if (!tv || tv->kind.telescope.size() != x->args.size() ||
          y.args.size() != x->args.size())
        return unequal("malformed type variable application");
      SubstMap m;
      for (std::size_t i = 0; i < x->args.size(); ++i) {
        const Binding& bnd = tv->kind.telescope[i];
        compare_term(ctx, substitute(bnd.type, m), x->args[i], y.args[i]);
        m.bind_term(bnd.name, x->args[i]);
      }
      finish(r);
      return r;
    }

    if (auto* x = std::get_if<Type::BaseApp>(&a->node)) {
      const auto& y = std::get<Type::BaseApp>(b->node);
      if (x->symbol != y.symbol)
        return unequal("different type symbols " + x->symbol.text + " and " +
                       y.symbol.text);
      const Signature::Symbol* s = sig_.find(x->symbol);
      if (!s || s->params.size() != x->args.size() ||
          y.args.size() != x->args.size())
        return unequal("malformed application of " + x->symbol.text);
      SubstMap m;
      for (std::size_t i = 0; i < x->args.size(); ++i) {
        const auto& entry = s->params[i];
        const auto& l = x->args[i];
        const auto& rr = y.args[i];
        if (l.value.index() != rr.value.index())
          return unequal("argument kinds differ");
        if (auto* tv = std::get_if<ContextEntry::TypeVar>(&entry.value)) {
          if (!merge(lambda_equal(ctx, l.type(), rr.type(), at))) return r;
          m.bind_type(tv->name, l.type());
        } else if (auto* v = std::get_if<ContextEntry::TermVar>(&entry.value)) {
          compare_term(ctx, substitute(v->type, m), l.term(), rr.term());
          m.bind_term(v->name, l.term());
        }
      }
      finish(r);
      return r;
    }

    const auto& x = std::get<Type::Pi>(a->node);
    const auto& y = std::get<Type::Pi>(b->node);
    if (!merge(equal(ctx, x.domain, y.domain, at))) return r;
    if (is_anonymous(x.binder) && is_anonymous(y.binder)) {
      merge(equal(ctx, x.codomain, y.codomain, at));
      finish(r);
      return r;
    }
    Name pref = is_anonymous(x.binder) ? y.binder : x.binder;
    NameSet avoid = context_names(ctx);
    collect_free_vars(x.codomain, avoid);
    collect_free_vars(y.codomain, avoid);
    Name z = lookup(ctx, pref) ? fresh_name(pref, avoid) : pref;
    TypeRef bx = rebind(x.binder, z, x.codomain);
    TypeRef by = rebind(y.binder, z, y.codomain);
    merge(equal(extended(ctx, mk::term_var(z, x.domain)), bx, by, at));
    finish(r);
    return r;
  }

  Obligation obligation(const Context& ctx, TermRef formula, std::string rule,
                        const SourceSpan& at) {
    Obligation ob;
    ob.context = ctx;
    ob.formula = std::move(formula);
    ob.provenance = Provenance{std::move(rule), decl_, span_of(at)};
    ob.theory_prefix = prefix_;
    return ob;
  }

  [[noreturn]] void fail(const SourceSpan& span, const std::string& msg) {
    throw CheckError(msg, span_of(span));
  }

 private:
  const SourceSpan& span_of(const SourceSpan& s) const {
    return s.valid() ? s : fallback_;
  }

  static void finish(EqResult& r) {
    if (r.unequal()) return;
    r.kind = r.obligations.empty() ? EqResult::Kind::kEqual
                                   : EqResult::Kind::kConditional;
  }

  static TypeRef rebind(const Name& from, const Name& to, const TypeRef& body) {
    if (is_anonymous(from) || from == to) return body;
    SubstMap m;
    m.bind_term(from, mk::var(to));
    return substitute(body, m);
  }

  // Picks a binder name that does not clash with the context and renames
  // the body accordingly.
  template <class Body>
  std::pair<Name, Body> open(const Context& ctx, const Name& x,
                             const Body& body) {
    if (!lookup(ctx, x)) return {x, body};
    NameSet avoid = context_names(ctx);
    collect_free_vars(body, avoid);
    Name z = fresh_name(x, avoid);
    SubstMap m;
    m.bind_term(x, mk::var(z));
    return {z, substitute(body, m)};
  }

  TypeLambda type_lambda(const Context& ctx, const TypeLambda& lam,
                         const Kind& kind, const SubstMap& outer,
                         const SourceSpan& at, std::vector<Obligation>& obs) {
    if (lam.params.size() != kind.telescope.size())
      fail(at, "type argument binds " + std::to_string(lam.params.size()) +
                   " variables, its kind expects " +
                   std::to_string(kind.telescope.size()));
    TypeLambda out;
    Context inner = ctx;
    SubstMap kmap = outer;
    SubstMap rename;
    for (std::size_t j = 0; j < lam.params.size(); ++j) {
      const Binding& p = lam.params[j];
      CheckedType pt = type(inner, substitute(p.type, rename));
      append(obs, std::move(pt.obligations));
      TypeRef expected = substitute(kind.telescope[j].type, kmap);
      EqResult r = equal(inner, pt.type, expected, at);
      if (r.unequal())
        fail(at, "type-level lambda parameter " + p.name.text + " has type " +
                     print_type(pt.type) + ", expected " + print_type(expected));
      append(obs, std::move(r.obligations));
      Name z = p.name;
      if (lookup(inner, z)) {
        NameSet avoid = context_names(inner);
        collect_free_vars(lam.body, avoid);
        z = fresh_name(z, avoid);
      }
      if (z != p.name) rename.bind_term(p.name, mk::var(z));
      kmap.bind_term(kind.telescope[j].name, mk::var(z));
      inner.push_back(mk::term_var(z, pt.type));
      out.params.push_back(Binding{z, pt.type});
    }
    CheckedType body = type(inner, substitute(lam.body, rename));
    append(obs, std::move(body.obligations));
    out.body = body.type;
    return out;
  }

  EqResult lambda_equal(const Context& ctx, const TypeLambda& l,
                        const TypeLambda& r, const SourceSpan& at) {
    EqResult res;
    if (l.params.size() != r.params.size()) {
      res.kind = EqResult::Kind::kUnequal;
      res.reason = "type arguments bind different numbers of variables";
      return res;
    }
    if (alpha_eq(l, r)) return res;
    Context inner = ctx;
    SubstMap ml;
    SubstMap mr;
    for (std::size_t j = 0; j < l.params.size(); ++j) {
      TypeRef lt = substitute(l.params[j].type, ml);
      EqResult d = equal(inner, lt, substitute(r.params[j].type, mr), at);
      if (d.unequal()) return d;
      append(res.obligations, std::move(d.obligations));
      Name z = l.params[j].name;
      if (lookup(inner, z)) {
        NameSet avoid = context_names(inner);
        collect_free_vars(l.body, avoid);
        collect_free_vars(r.body, avoid);
        z = fresh_name(z, avoid);
      }
      ml.bind_term(l.params[j].name, mk::var(z));
      mr.bind_term(r.params[j].name, mk::var(z));
      inner.push_back(mk::term_var(z, lt));
    }
    EqResult b = equal(inner, substitute(l.body, ml), substitute(r.body, mr), at);
    if (b.unequal()) return b;
    append(res.obligations, std::move(b.obligations));
    finish(res);
    return res;
  }

  const Signature& sig_;
  Name decl_;
  std::size_t prefix_;
  SourceSpan fallback_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points

Typed infer_type(const Signature& sig, const Context& ctx, const TermRef& t) {
  return Checker(sig, {}, 0, {}).infer(ctx, t);
}

Typed check_term(const Signature& sig, const Context& ctx, const TermRef& t,
                 const TypeRef& expected) {
  return Checker(sig, {}, 0, {}).check(ctx, t, expected);
}

CheckedType check_type(const Signature& sig, const Context& ctx,
                       const TypeRef& a) {
  return Checker(sig, {}, 0, {}).type(ctx, a);
}

CheckedContext check_context(const Signature& sig, const Context& ctx,
                             const Context& local, bool allow_assumptions) {
  return Checker(sig, {}, 0, {}).context(ctx, local, allow_assumptions);
}

EqResult type_equal(const Signature& sig, const Context& ctx, const TypeRef& a,
                    const TypeRef& b) {
  return Checker(sig, {}, 0, {}).equal(ctx, a, b, {});
}

std::vector<Obligation> check_subst(const Signature& sig, const Context& ctx,
                                    const Substitution& delta,
                                    const Context& target) {
  return Checker(sig, {}, 0, {}).subst(ctx, delta, target, {}).second;
}

namespace {

struct CheckedSubtype {
  Declaration::SubtypeDef def;
  std::vector<Obligation> obligations;
};

CheckedSubtype subtype_def(Checker& chk, const Context& ctx,
                           const Declaration::SubtypeDef& def,
                           const SourceSpan& span) {
  bool seen_term = false;
  for (const auto& e : def.params) {
    if (e.is_term_var()) seen_term = true;
    if (e.is_type_var() && seen_term)
      chk.fail(span, "subtype parameters must list type variables before "
                     "term variables");
    if (auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value);
        tv && !tv->kind.is_simple())
      chk.fail(span, "subtype parameters cannot be dependent type variables");
  }
  CheckedSubtype out;
  CheckedContext params = chk.context(ctx, def.params, false);
  out.obligations = std::move(params.obligations);
  Context full = ctx;
  for (const auto& e : params.context) full.push_back(e);
  CheckedType carrier = chk.type(full, def.carrier);
  append(out.obligations, std::move(carrier.obligations));
  TypeRef pred_type = mk::arrow(carrier.type, mk::boolean());
  Typed pred = chk.check(full, def.predicate, pred_type);
  append(out.obligations, std::move(pred.obligations));

  NameSet avoid = context_names(full);
  collect_free_vars(pred.term, avoid);
  Name v = fresh_name("v", avoid);
  TermRef nonempty =
      logic::mk_exists(v, carrier.type, mk::app(pred.term, mk::var(v)));
  out.obligations.push_back(
      chk.obligation(full, nonempty, "subtype-nonempty", def.predicate->span));
  out.def = Declaration::SubtypeDef{def.name, params.context, carrier.type,
                                    pred.term};
  return out;
}

}  // namespace

std::vector<Obligation> check_subtype_def(const Signature& sig,
                                          const Context& ctx,
                                          const Declaration::SubtypeDef& def) {
  Checker chk(sig, def.name, 0, {});
  return subtype_def(chk, ctx, def, {}).obligations;
}

CheckResult check_problem(const Problem& problem) {
  CheckResult result;
  CheckedProblem out;
  Signature sig;
  const auto& decls = problem.theory.declarations;

  auto check_one = [&](const Declaration& d, std::size_t index) -> Declaration {
    if (sig.contains(d.name()))
      throw CheckError("duplicate declaration '" + d.name().text + "'", d.span);
    Checker chk(sig, d.name(), index, d.span);
    return std::visit(
        [&](const auto& n) -> Declaration {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Declaration::SubtypeDef>) {
            CheckedSubtype s = subtype_def(chk, {}, n, d.span);
            append(out.obligations, std::move(s.obligations));
            return Declaration{std::move(s.def), d.span};
          } else {
            CheckedContext params = chk.context({}, n.params, false);
            append(out.obligations, std::move(params.obligations));
            if constexpr (std::is_same_v<N, Declaration::TypeSym>) {
              return Declaration{N{n.name, params.context}, d.span};
            } else if constexpr (std::is_same_v<N, Declaration::TermSym>) {
              CheckedType t = chk.type(params.context, n.type);
              append(out.obligations, std::move(t.obligations));
              return Declaration{N{n.name, params.context, t.type}, d.span};
            } else {
              Typed f = chk.check(params.context, n.formula, mk::boolean());
              append(out.obligations, std::move(f.obligations));
              return Declaration{N{n.label, params.context, f.term}, d.span};
            }
          }
        },
        d.value);
  };

  try {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (std::holds_alternative<Declaration::Conjecture>(decls[i].value))
        throw CheckError("a conjecture may only appear at the end",
                         decls[i].span);
      Declaration checked = check_one(decls[i], i);
      sig.add(checked, i);
      out.problem.theory.declarations.push_back(std::move(checked));
    }
    if (problem.conjecture)
      out.problem.conjecture = check_one(*problem.conjecture, decls.size());
  } catch (const CheckError& e) {
    result.diagnostics.push_back(
        Diagnostic{Severity::kError, e.what(), e.span()});
    return result;
  } catch (const Error& e) {
    result.diagnostics.push_back(Diagnostic{Severity::kError, e.what(), {}});
    return result;
  }

  Name prefix = obligation_prefix(problem);
  for (std::size_t k = 0; k < out.obligations.size(); ++k)
    out.obligations[k].id = Name{prefix.text + "_tco" + std::to_string(k + 1)};
  result.checked = std::move(out);
  return result;
}

}  // namespace pdhol

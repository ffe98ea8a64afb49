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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/core/subtype.hpp"
#include "pdhol/surface/printer.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pdhol;
using testkit::numeral;
using testkit::term_in;
using testkit::type_in;

namespace {

const std::string& vec() {
  static const std::string t = testkit::vector_theory();
  return t;
}

TermRef T(const std::string& params, const std::string& text) {
  return term_in(vec(), params, text);
}

TypeRef nat() { return mk::base("nat"); }

std::set<std::string> strings(const NameSet& names) {
  std::set<std::string> out;
  for (const auto& n : names) out.insert(n.text);
  return out;
}

// Renames every variable of Γ to v_r, and maps simple type variables to nat
// every other time.
Substitution renaming(const Context& gamma) {
  Substitution out;
  bool to_nat = false;
  for (const auto& e : gamma) {
    if (const auto* tv = std::get_if<ContextEntry::TypeVar>(&e.value)) {
      if (tv->kind.is_simple()) {
        to_nat = !to_nat;
        out.push_back(mk::type_arg(to_nat ? nat() : mk::tvar(tv->name.text + "_r")));
        continue;
      }
      std::vector<TermRef> args;
      for (const auto& b : tv->kind.telescope) args.push_back(mk::var(b.name));
      out.push_back(mk::type_arg(tv->kind.telescope,
                                 mk::tvar(tv->name.text + "_r", args)));
    } else if (const auto* x = std::get_if<ContextEntry::TermVar>(&e.value)) {
      out.push_back(mk::term_arg(mk::var(x->name.text + "_r")));
    } else {
      out.push_back(mk::check());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("alpha_eq examples") {
  auto id_x = mk::lam("x", nat(), mk::var("x"));
  auto id_y = mk::lam("y", nat(), mk::var("y"));
  auto const0 = mk::lam("x", nat(), mk::cnst("zero"));
  CHECK(alpha_eq(id_x, id_y));
  CHECK_FALSE(alpha_eq(id_x, const0));

  auto pn = mk::pi("n", nat(), mk::base("vect", {mk::type_arg(mk::tvar("A")),
                                                 mk::term_arg(mk::var("n"))}));
  auto pm = mk::pi("m", nat(), mk::base("vect", {mk::type_arg(mk::tvar("A")),
                                                 mk::term_arg(mk::var("m"))}));
  CHECK(alpha_eq(pn, pm));
  CHECK(oracle::alpha_eq(pn, pm));
  // A free variable is not a binder.
  auto pk = mk::pi("m", nat(), mk::base("vect", {mk::type_arg(mk::tvar("A")),
                                                 mk::term_arg(mk::var("n"))}));
  CHECK_FALSE(alpha_eq(pn, pk));
  CHECK_FALSE(oracle::alpha_eq(pn, pk));
}

TEST_CASE("fresh names prime the original text") {
  CHECK(fresh_name("x", {}).text == "x");
  CHECK(fresh_name("x", {"x"}).text == "x'");
  CHECK(fresh_name("x", {"x", "x'"}).text == "x''");
}

TEST_CASE("substitution renames a capturing binder") {
  auto t = T("(y : nat)", "\\(x : nat). plus x y");
  Context dom = {mk::term_var("y", nat())};
  auto r = subst_apply(t, {mk::term_arg(mk::var("x"))}, dom);
  const auto* lam = std::get_if<Term::Lambda>(&r->node);
  REQUIRE(lam);
  CHECK(lam->binder.text == "x'");
  CHECK(alpha_eq(r, T("(x : nat)", "\\(z : nat). plus z x")));
  // Evaluate both sides at 0, 1, 2.
  for (int k = 0; k < 3; ++k) {
    auto lhs = oracle::normalize(mk::app(r, T("", numeral(k))));
    auto rhs = T("(x : nat)", "plus (" + numeral(k) + ") x");
    CHECK(oracle::alpha_eq(lhs, rhs));
  }
}

TEST_CASE("substituting numerals into a two-element vector") {
  Context ctx = {mk::term_var("n", nat()), mk::term_var("m", nat()),
                 mk::assumption(T("(n : nat)", "n = " + numeral(2))),
                 mk::assumption(T("(m : nat)", "m = " + numeral(3)))};
  auto e = T("(n : nat) (m : nat)",
             "cons nat (" + numeral(1) + ") n (cons nat zero m (nil nat))");
  Substitution gamma = {mk::term_arg(T("", numeral(2))),
                        mk::term_arg(T("", "suc (" + numeral(2) + ")")),
                        mk::check(), mk::check()};
  auto want = T("", "cons nat (" + numeral(1) + ") (" + numeral(2) +
                        ") (cons nat zero (suc (" + numeral(2) +
                        ")) (nil nat))");
  CHECK(alpha_eq(subst_apply(e, gamma, ctx), want));

  CHECK_THROWS_AS(subst_apply(e, {mk::check()}, ctx), Error);
  CHECK_THROWS_AS(subst_apply(T("(k : nat)", "k"), gamma, ctx), Error);
}

TEST_CASE("type-level substitutes are beta-contracted") {
  Context dom = {mk::type_var("L", Kind{{{"i", nat()}}})};
  TypeRef a = mk::tvar("L", {T("", numeral(1))});
  Substitution d = {mk::type_arg(
      {{"j", nat()}}, mk::base("vect", {mk::type_arg(nat()),
                                        mk::term_arg(mk::var("j"))}))};
  CHECK(alpha_eq(subst_apply(a, d, dom),
                 type_in(vec(), "", "vect nat (" + numeral(1) + ")")));
}

TEST_CASE("normalize examples") {
  CHECK(alpha_eq(normalize(T("", "(\\(x : nat). x) zero")), T("", "zero")));
  CHECK(alpha_eq(normalize(T("(f : nat -> nat)", "\\(x : nat). f x")),
                 T("(f : nat -> nat)", "f")));
  // x free in the function part blocks eta.
  auto blocked = T("(g : nat -> nat -> nat)", "\\(x : nat). g x x");
  CHECK(alpha_eq(normalize(blocked), blocked));

  auto t = T("", "(\\(x : nat). \\(y : nat). plus x y) (" + numeral(1) +
                     ") (" + numeral(2) + ")");
  auto want = T("", "plus (" + numeral(1) + ") (" + numeral(2) + ")");
  CHECK(alpha_eq(normalize(t), want));
  CHECK(oracle::alpha_eq(oracle::normalize(t), want));
}

TEST_CASE("normalize reports an exhausted budget") {
  // (λx. x x)(λx. x x) is ill-typed and diverges.
  TypeRef a = nat();
  auto w = mk::lam("x", a, mk::app(mk::var("x"), mk::var("x")));
  CHECK_THROWS_WITH_AS(normalize(mk::app(w, w)),
                       doctest::Contains("normalization budget exceeded"),
                       Error);
}

TEST_CASE("free_vars examples") {
  CHECK(strings(free_vars(mk::var("x"))) == std::set<std::string>{"x"});
  TypeRef va = type_in(vec(), "(B : Type) (n : nat)", "vect B n");
  CHECK(strings(free_vars(mk::lam("x", va, mk::var("x")))) ==
        std::set<std::string>{"B", "n"});
  auto eq = mk::eq(va, mk::var("s"), mk::app(mk::var("f"), mk::var("x")));
  CHECK(strings(free_vars(eq)) ==
        std::set<std::string>{"B", "n", "s", "f", "x"});
  CHECK(strings(free_vars(eq)) == oracle::free_vars(eq));
}

TEST_CASE("connective encodings round trip through their matchers") {
  auto p = mk::var("p");
  auto q = mk::var("q");
  CHECK(logic::is_true(logic::mk_true()));
  CHECK(logic::is_false(logic::mk_false()));
  CHECK_FALSE(logic::is_true(logic::mk_false()));
  auto n = logic::match_not(logic::mk_not(p));
  REQUIRE(n);
  CHECK(alpha_eq(*n, p));
  auto a = logic::match_and(logic::mk_and(p, q));
  REQUIRE(a);
  CHECK(alpha_eq(a->first, p));
  CHECK(alpha_eq(a->second, q));
  auto o = logic::match_or(logic::mk_or(p, q));
  REQUIRE(o);
  CHECK(alpha_eq(o->second, q));
  auto f = logic::match_forall(logic::mk_forall("x", nat(), p));
  REQUIRE(f);
  CHECK(f->binder.text == "x");
  auto e = logic::match_exists(logic::mk_exists("x", nat(), p));
  REQUIRE(e);
  CHECK(alpha_eq(e->type, nat()));
  CHECK(logic::match_iff(logic::mk_iff(p, q)));
  // ⊤ unfolds to an equality of identities on o.
  const auto* eqn = std::get_if<Term::Eq>(&logic::mk_true()->node);
  REQUIRE(eqn);
  CHECK(alpha_eq(eqn->lhs, mk::lam("p", mk::boolean(), mk::var("p"))));
}

TEST_CASE("subtype elaboration over o") {
  Declaration::SubtypeDef def{"pos", {}, mk::boolean(),
                              mk::lam("x", mk::boolean(), mk::var("x"))};
  auto decls = elaborate_subtype(def);
  REQUIRE(decls.size() == 4);
  CHECK(decls[0].name().text == "pos");
  CHECK(decls[1].name() == subtype_abs_name("pos"));
  CHECK(decls[2].name() == subtype_rep_name("pos"));
  CHECK(decls[3].name() == subtype_axiom_name("pos"));
  const auto& ax = std::get<Declaration::Axiom>(decls[3].value);
  auto both = logic::match_and(ax.formula);
  REQUIRE(both);
  CHECK(logic::match_forall(both->first));
  CHECK(logic::match_forall(both->second));
}

TEST_CASE("property: identity substitution") {
  testkit::Generator gen(101);
  for (int i = 0; i < 300; ++i) {
    auto in = gen.subst_instance();
    auto id = identity_substitution(in.delta);
    CHECK(alpha_eq(subst_apply(in.term, id, in.delta), in.term));
    CHECK(alpha_eq(subst_apply(in.type, id, in.delta), in.type));
  }
}

TEST_CASE("property: substitution composes") {
  testkit::Generator gen(202);
  for (int i = 0; i < 300; ++i) {
    auto in = gen.subst_instance();
    Substitution rho = renaming(in.gamma);
    Substitution composed = substitute(in.sigma, make_subst_map(rho, in.gamma));
    auto two_steps =
        subst_apply(subst_apply(in.term, in.sigma, in.delta), rho, in.gamma);
    auto one_step = subst_apply(in.term, composed, in.delta);
    CHECK(oracle::alpha_eq(oracle::normalize(two_steps),
                           oracle::normalize(one_step)));
    auto ty2 =
        subst_apply(subst_apply(in.type, in.sigma, in.delta), rho, in.gamma);
    CHECK(oracle::alpha_eq(normalize(ty2),
                           normalize(subst_apply(in.type, composed, in.delta))));
  }
}

TEST_CASE("property: normalize agrees with the small-step oracle") {
  testkit::Generator gen(303);
  for (int i = 0; i < 300; ++i) {
    auto in = gen.subst_instance();
    // Wrap the term in a redex so there is something to reduce.
    auto redex = mk::app(mk::lam("w", in.type, mk::var("w")),
                         subst_apply(in.term, in.sigma, in.delta));
    auto n = normalize(redex);
    CHECK(oracle::alpha_eq(n, oracle::normalize(redex)));
    CHECK(alpha_eq(normalize(n), n));
  }
}

TEST_CASE("property: alpha_eq and free_vars agree with the oracles") {
  testkit::Generator gen(404);
  std::vector<TermRef> terms;
  for (int i = 0; i < 120; ++i) {
    auto in = gen.subst_instance();
    terms.push_back(in.term);
    terms.push_back(subst_apply(in.term, in.sigma, in.delta));
    CHECK(strings(free_vars(in.term)) == oracle::free_vars(in.term));
    CHECK(strings(free_vars(in.type)) == oracle::free_vars(in.type));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(alpha_eq(terms[i], terms[i]));
    for (std::size_t j = i + 1; j < terms.size() && j < i + 8; ++j) {
      bool ij = alpha_eq(terms[i], terms[j]);
      CHECK(ij == alpha_eq(terms[j], terms[i]));
      CHECK(ij == oracle::alpha_eq(terms[i], terms[j]));
    }
  }
}

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

#include <sstream>
#include <string>

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/surface/diagnostic.hpp"
#include "pdhol/surface/parser.hpp"
#include "pdhol/surface/printer.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace pdhol;

namespace {

void check_round_trip(const Problem& p) {
  std::string text = print_surface(p);
  ParseResult again = parse_problem(text, "<printed>");
  REQUIRE_MESSAGE(again.ok(), text);
  CHECK_MESSAGE(alpha_eq(*again.problem, p), text);
  // Deterministic layout.
  CHECK(print_surface(*again.problem) == text);
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("type and constant declarations") {
  Problem p = testkit::parse_source(
      "type nat. const zero : nat.\n"
      "type vect (A : Type) (n : nat).\n"
      "const nil (A : Type) : vect A zero.\n");
  REQUIRE(p.theory.declarations.size() == 4);
  const auto& vect = std::get<Declaration::TypeSym>(p.theory.declarations[2].value);
  CHECK(vect.name.text == "vect");
  REQUIRE(vect.params.size() == 2);
  const auto& a = std::get<ContextEntry::TypeVar>(vect.params[0].value);
  CHECK(a.name.text == "A");
  CHECK(a.kind.is_simple());
  const auto& n = std::get<ContextEntry::TermVar>(vect.params[1].value);
  CHECK(n.name.text == "n");
  CHECK(alpha_eq(n.type, mk::base("nat")));

  const auto& nil = std::get<Declaration::TermSym>(p.theory.declarations[3].value);
  REQUIRE(nil.params.size() == 1);
  CHECK(alpha_eq(nil.type, mk::base("vect", {mk::type_arg(mk::tvar("A")),
                                             mk::term_arg(mk::cnst("zero"))})));
  CHECK_FALSE(p.conjecture);
}

TEST_CASE("empty input is an empty theory") {
  ParseResult r = parse_problem("");
  REQUIRE(r.ok());
  CHECK(r.problem->theory.declarations.empty());
  CHECK_FALSE(r.problem->conjecture);
  CHECK(r.diagnostics.empty());
  check_round_trip(*r.problem);
}

TEST_CASE("kinds of dependent type variables") {
  Problem p = testkit::parse_source(
      "type nat.\n"
      "type fin (n : nat).\n"
      "type h (n : nat) (L : (i : fin n) -> Type).\n");
  const auto& h = std::get<Declaration::TypeSym>(p.theory.declarations[2].value);
  const auto& l = std::get<ContextEntry::TypeVar>(h.params[1].value);
  REQUIRE(l.kind.telescope.size() == 1);
  CHECK(l.kind.telescope[0].name.text == "i");
  CHECK(alpha_eq(l.kind.telescope[0].type,
                 mk::base("fin", {mk::term_arg(mk::var("n"))})));
}

TEST_CASE("sugar is desugared into the primitives") {
  const std::string th = "type nat. const p : nat -> o.\n";
  auto parsed = testkit::term_in(th, "", "! (n : nat). p n");
  CHECK(alpha_eq(parsed, logic::mk_forall("n", mk::base("nat"),
                                          mk::app(mk::cnst("p"), mk::var("n")))));
  auto q = mk::var("q");
  auto r = mk::var("r");
  CHECK(alpha_eq(testkit::term_in(th, "(q : o) (r : o)", "q & r"),
                 logic::mk_and(q, r)));
  CHECK(alpha_eq(testkit::term_in(th, "(q : o) (r : o)", "q | ~ r"),
                 logic::mk_or(q, logic::mk_not(r))));
  CHECK(alpha_eq(testkit::term_in(th, "(q : o) (r : o)", "q <=> r"),
                 logic::mk_iff(q, r)));
  CHECK(alpha_eq(testkit::term_in(th, "", "$true => $false"),
                 mk::implies(logic::mk_true(), logic::mk_false())));
  CHECK(alpha_eq(testkit::term_in(th, "", "? (n : nat). p n"),
                 logic::mk_exists("n", mk::base("nat"),
                                  mk::app(mk::cnst("p"), mk::var("n")))));
  // Annotated equality keeps its type.
  auto eq = testkit::term_in(th, "(n : nat)", "n =[nat] n");
  const auto* e = std::get_if<Term::Eq>(&eq->node);
  REQUIRE(e);
  REQUIRE(e->type);
  CHECK(alpha_eq(e->type, mk::base("nat")));
}

TEST_CASE("arrows nest to the right, application to the left") {
  const std::string th = "type nat.\n";
  auto t = testkit::type_in(th, "", "nat -> nat -> o");
  CHECK(alpha_eq(t, mk::arrow(mk::base("nat"),
                              mk::arrow(mk::base("nat"), mk::boolean()))));
  auto a = testkit::term_in(th, "(f : nat -> nat -> o) (x : nat) (y : nat)",
                            "f x y");
  CHECK(alpha_eq(a, mk::app(mk::app(mk::var("f"), mk::var("x")), mk::var("y"))));
  auto d = testkit::type_in("type nat. type fin (n : nat).\n", "",
                            "(n : nat) -> fin n");
  CHECK(alpha_eq(d, mk::pi("m", mk::base("nat"),
                           mk::base("fin", {mk::term_arg(mk::var("m"))}))));
}

TEST_CASE("rejected inputs") {
  const char* bad[] = {
      "type nat. const x_per : nat.",
      "type nat. const zero_abs : nat.",
      "type nat. const f_rep : nat.",
      "type nat. axiom a_tco3 : $true.",
      "type nat. type nat.",
      "type nat. const c : nat. const c : nat.",
      "type nat. const c : nat",
      "type nat. const c : @nat.",
      "const c : undefined_type.",
      "type nat. conjecture a : $true. conjecture b : $true.",
      "type nat. const f : nat -> nat. axiom a : f = .",
      "type vect (A : Type) (n : nat).",
  };
  for (const char* src : bad) {
    ParseResult r = parse_problem(src, "bad.pdhol");
    CHECK_MESSAGE(!r.ok(), src);
    CHECK_MESSAGE(has_errors(r.diagnostics), src);
    // Every diagnostic points inside the source.
    auto lines = lines_of(src);
    for (const auto& d : r.diagnostics) {
      REQUIRE(d.span.valid());
      REQUIRE(d.span.line <= lines.size());
      CHECK(d.span.column >= 1);
      CHECK(d.span.column <= lines[d.span.line - 1].size() + 1);
    }
  }
}

TEST_CASE("reserved name components") {
  CHECK(is_reserved_name("vect_per"));
  CHECK(is_reserved_name("hom_abs"));
  CHECK(is_reserved_name("hom_rep"));
  CHECK(is_reserved_name("goal_tco12"));
  CHECK_FALSE(is_reserved_name("per"));
  CHECK_FALSE(is_reserved_name("tco"));
  CHECK_FALSE(is_reserved_name("goal_tcox"));
  CHECK_FALSE(is_reserved_name("reper"));
  CHECK_FALSE(is_reserved_name("plus_zero"));
}

TEST_CASE("diagnostic format") {
  ParseResult r = parse_problem("type nat.\nconst c : nat", "f.pdhol");
  REQUIRE_FALSE(r.ok());
  std::string s = format_diagnostic(r.diagnostics.front());
  CHECK(s.rfind("f.pdhol:2:", 0) == 0);
  CHECK(s.find(": error: ") != std::string::npos);
}

TEST_CASE("round trip on every fixture") {
  for (const auto& name : testkit::all_fixtures()) {
    CAPTURE(name);
    check_round_trip(testkit::load_fixture(name));
    // After checking, the annotated problem prints and reparses as well.
    check_round_trip(testkit::check_fixture(name).problem);
  }
}

TEST_CASE("property: round trip on generated problems") {
  testkit::Generator gen(7);
  for (int i = 0; i < 150; ++i) check_round_trip(gen.phol_problem());
}

TEST_CASE("property: round trip on generated terms") {
  testkit::Generator gen(8);
  const std::string th = testkit::kGeneratorTheory;
  for (int i = 0; i < 150; ++i) {
    auto in = gen.subst_instance();
    // Parameter lists cannot carry assumptions; they become hypotheses.
    Context params;
    std::vector<TermRef> hyps;
    for (const auto& e : in.delta) {
      if (const auto* a = std::get_if<ContextEntry::Assumption>(&e.value))
        hyps.push_back(a->formula);
      else
        params.push_back(e);
    }
    Problem p = testkit::parse_source(th);
    p.conjecture = Declaration{
        Declaration::Conjecture{
            "c", params,
            logic::mk_implies_chain(hyps, mk::eq(in.type, in.term, in.term))},
        {}};
    check_round_trip(p);
  }
}

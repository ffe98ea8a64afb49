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

#include <cctype>
#include <sstream>
#include <map>
#include <set>
#include <string>

#include "pdhol/core/logic.hpp"
#include "pdhol/driver/driver.hpp"
#include "pdhol/erasure/erasure.hpp"
#include "pdhol/tptp/th1.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/th1_lexer.hpp"

using namespace pdhol;

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1))
    ++n;
  return n;
}

Declaration goal(const std::string& label, TermRef f) {
  return Declaration{Declaration::Conjecture{label, {}, std::move(f)}, {}};
}

}  // namespace

TEST_CASE("mangle examples") {
  CHECK(mangle("vect", NameRole::kConstant) == "vect");
  CHECK(mangle("plus'", NameRole::kConstant) == "plus_x27");
  CHECK(mangle("0", NameRole::kConstant) == "c_x30");
  CHECK(mangle("x", NameRole::kVariable) == "Vx");
  CHECK(mangle("A_per", NameRole::kVariable) == "A_per");
  CHECK(mangle("Vec", NameRole::kVariable) == "VVec");
  // An underscore before x is escaped so that _xHH stays unambiguous.
  CHECK(mangle("a_x27", NameRole::kConstant) != mangle("a'", NameRole::kConstant));
}

TEST_CASE("property: mangle is injective and well-formed") {
  testkit::Generator gen(31);
  std::set<std::string> names;
  for (int i = 0; i < 3000; ++i) names.insert(gen.random_name());
  for (const char* extra : {"x", "x'", "x_x27", "_x", "X", "VX", "Vx", "c", "C",
                            "c_x30", "0", "a_per", "A_per"})
    names.insert(extra);
  for (NameRole role : {NameRole::kConstant, NameRole::kVariable}) {
    std::map<std::string, std::string> seen;
    for (const auto& n : names) {
      std::string m = mangle(n, role);
      CHECK(is_identifier(m));
      if (role == NameRole::kConstant)
        CHECK(std::islower(static_cast<unsigned char>(m[0])));
      else
        CHECK(std::isupper(static_cast<unsigned char>(m[0])));
      auto [it, fresh] = seen.emplace(m, n);
      CHECK_MESSAGE(fresh, (n + " and " + it->second + " both map to " + m));
    }
  }
}

TEST_CASE("type declarations and a trivial goal") {
  std::vector<Declaration> th = {
      Declaration{Declaration::TypeSym{"vect", {mk::type_var("A")}}, {}},
      Declaration{Declaration::TypeSym{"nat", {}}, {}},
      Declaration{Declaration::TermSym{"zero", {}, mk::base("nat")}, {}},
  };
  std::string text = emit_th1(
      th, goal("goal", mk::eq(mk::base("nat"), mk::cnst("zero"), mk::cnst("zero"))));
  CHECK(text.find("thf(vect_type, type, vect : $tType > $tType).\n") !=
        std::string::npos);
  CHECK(text.find("thf(goal, conjecture, (zero = zero)).\n") != std::string::npos);
  CHECK(testkit::read_th1(text).ok);
  CHECK(th1_type(mk::arrow(mk::boolean(), mk::boolean())) == "($o > $o)");
}

TEST_CASE("comments lead the file") {
  std::string text = emit_th1({}, goal("g", logic::mk_true()),
                              {"source: here", "provenance: there"});
  CHECK(text.rfind("% source: here\n% provenance: there\n", 0) == 0);
  auto r = testkit::read_th1(text);
  REQUIRE(r.ok);
  CHECK(r.comments == std::vector<std::string>{"source: here", "provenance: there"});
}

TEST_CASE("non-PHOL input is refused") {
  std::vector<Declaration> th = {
      Declaration{Declaration::TypeSym{"nat", {}}, {}},
      Declaration{Declaration::TypeSym{"fin", {mk::term_var("n", mk::base("nat"))}}, {}},
  };
  CHECK_THROWS_AS(emit_th1(th, goal("g", logic::mk_true())), Error);
}

TEST_CASE("the vect PER axiom is a single polymorphic formula") {
  auto cp = testkit::check_fixture("vectors");
  Translation t = translate(cp, "vectors", "vectors.pdhol", true);
  REQUIRE(t.files.size() == 1);
  const std::string& text = t.files[0].text;
  auto r = testkit::read_th1(text);
  REQUIRE_MESSAGE(r.ok, r.error);
  const std::string want =
      "thf(vect_per_type, type, vect_per : !>[A: $tType]: ((A > A > $o) > nat > "
      "(vect @ A) > (vect @ A) > $o)).";
  CHECK(text.find(want) != std::string::npos);
  auto pos = text.find("thf(vect_per_isper, axiom, ![A: $tType]: (![A_per: (A > A > $o), Vn: nat]:");
  CHECK(pos != std::string::npos);
  CHECK(text.find("nat_per") == std::string::npos);
}

TEST_CASE("every translation re-lexes, is deterministic and rank-1") {
  for (const auto& name : testkit::all_fixtures()) {
    auto cp = testkit::check_fixture(name);
    if (!cp.problem.conjecture) continue;
    for (bool collapse : {true, false}) {
      CAPTURE(name);
      CAPTURE(collapse);
      Translation a = translate(cp, name, name + ".pdhol", collapse);
      Translation b = translate(cp, name, name + ".pdhol", collapse);
      REQUIRE(a.files.size() == cp.obligations.size() + 1);
      for (std::size_t i = 0; i < a.files.size(); ++i) {
        const auto& f = a.files[i];
        CHECK(f.text == b.files[i].text);
        bool last = i + 1 == a.files.size();
        CHECK(f.file_name ==
              (last ? name + ".p" : name + ".tco" + std::to_string(i + 1) + ".p"));
        auto r = testkit::read_th1(f.text);
        REQUIRE_MESSAGE(r.ok, (r.error + "\n" + f.text));
        std::size_t conjectures = 0;
        for (const auto& s : r.statements) {
          if (s.role == "conjecture") ++conjectures;
        }
        CHECK(conjectures == 1);
        REQUIRE_FALSE(r.comments.empty());
        CHECK(r.comments[0].rfind("source: ", 0) == 0);
        bool provenance = false, obligation = false;
        for (const auto& c : r.comments) {
          provenance = provenance || c.rfind("provenance: ", 0) == 0;
          obligation = obligation || c.rfind("obligation-of: ", 0) == 0;
        }
        CHECK(provenance);
        CHECK(obligation == f.is_tco);
        // Type binders only at the top of type declarations.
        std::istringstream lines(f.text);
        std::string line;
        while (std::getline(lines, line)) {
          std::size_t n = count(line, "!>");
          if (line.find(", type, ") == std::string::npos) {
            CHECK(n == 0);
          } else {
            CHECK(n <= 1);
            if (n) CHECK(line.find(": !>[") == line.find(':'));
          }
        }
      }
    }
  }
}

TEST_CASE("property: generated problems emit valid TH1") {
  testkit::Generator gen(77);
  for (int i = 0; i < 100; ++i) {
    Problem p = gen.phol_problem();
    CheckResult r = check_problem(p);
    REQUIRE(r.ok());
    Translation t = translate(*r.checked, "gen", "gen", i % 2 == 0);
    for (const auto& f : t.files) {
      auto lx = testkit::read_th1(f.text);
      CHECK_MESSAGE(lx.ok, (lx.error + "\n" + f.text));
    }
  }
}

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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <unistd.h>

#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/driver/driver.hpp"
#include "pdhol/erasure/erasure.hpp"
#include "support/fixtures.hpp"

using namespace pdhol;
using testkit::numeral;
namespace fs = std::filesystem;

namespace {

std::string fake(const std::string& script) {
  return std::string(PDHOL_FAKE_PROVERS) + "/" + script + " %f";
}

ProverConfig config(const std::string& script, int timeout = 10, int jobs = 1) {
  ProverConfig cfg;
  cfg.command = fake(script);
  cfg.timeout_seconds = timeout;
  cfg.jobs = jobs;
  return cfg;
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() /
               ("pdhol-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string write_problem(const fs::path& dir) {
  fs::path p = dir / "p.p";
  std::ofstream(p) << "thf(g, conjecture, $true).\n";
  return p.string();
}

TermRef T(const std::string& params, const std::string& text) {
  static const std::string th = testkit::vector_theory();
  return testkit::term_in(th, params, text);
}

TypeRef nat() { return mk::base("nat"); }

ObligationReport report(SzsStatus s, bool tco = true) {
  ObligationReport r;
  r.id = "x";
  r.is_tco = tco;
  r.result.status = s;
  return r;
}

Verdict without_times(Verdict v) {
  for (auto& r : v.obligations) {
    r.result.seconds = 0;
    r.result.excerpt.clear();
  }
  return v;
}

}  // namespace

TEST_CASE("parse_szs") {
  CHECK(parse_szs("% SZS status Theorem for p") == SzsStatus::kTheorem);
  CHECK(parse_szs("blah\n% SZS status ContradictoryAxioms for finite-type\n") ==
        SzsStatus::kContradictoryAxioms);
  CHECK(parse_szs("SZS status CounterSatisfiable") == SzsStatus::kCounterSatisfiable);
  CHECK(parse_szs("# SZS status Timeout") == SzsStatus::kTimeout);
  CHECK(parse_szs("% SZS status GaveUp") == SzsStatus::kGaveUp);
  CHECK(parse_szs("% SZS status Error") == SzsStatus::kError);
  CHECK(parse_szs("% SZS status Satisfiable") == SzsStatus::kUnknown);
  CHECK(parse_szs("% SZS status TrivialRefl") == SzsStatus::kUnknown);
  CHECK(parse_szs("") == SzsStatus::kUnknown);
  CHECK(parse_szs("Theorem") == SzsStatus::kUnknown);
  // First occurrence wins.
  CHECK(parse_szs("SZS status GaveUp\nSZS status Theorem\n") == SzsStatus::kGaveUp);
}

TEST_CASE("status names") {
  CHECK(to_string(SzsStatus::kTrivialRefl) == "TrivialRefl");
  CHECK(to_string(SzsStatus::kContradictoryAxioms) == "ContradictoryAxioms");
  CHECK(to_string(Overall::kProven) == "Proven");
  CHECK(to_string(Overall::kOpen) == "Open");
}

TEST_CASE("config validation and command expansion") {
  CHECK_FALSE(validate(config("theorem.sh")));
  ProverConfig cfg = config("theorem.sh");
  cfg.command = "prover";
  CHECK(validate(cfg));
  cfg = config("theorem.sh", 0);
  CHECK(validate(cfg));
  cfg = config("theorem.sh", 10, 0);
  CHECK(validate(cfg));
  cfg.command.clear();
  CHECK(validate(cfg));

  CHECK(expand_command("p -t %t %f", "a.p", 7) == "p -t 7 'a.p'");
  CHECK(expand_command("p %f", "it's.p", 1) == "p 'it'\\''s.p'");
  CHECK(expand_command("p 100%% %q", "a", 1) == "p 100% %q");
}

TEST_CASE("run_prover against scripted provers") {
  fs::path dir = scratch_dir("run");
  std::string file = write_problem(dir);

  SzsResult th = run_prover(file, config("theorem.sh"));
  CHECK(th.status == SzsStatus::kTheorem);
  CHECK(th.excerpt.find("SZS status Theorem") != std::string::npos);
  CHECK(run_prover(file, config("countersat.sh")).status ==
        SzsStatus::kCounterSatisfiable);
  CHECK(run_prover(file, config("contradictory.sh")).status ==
        SzsStatus::kContradictoryAxioms);
  CHECK(run_prover(file, config("gaveup.sh")).status == SzsStatus::kGaveUp);
  SzsResult silent = run_prover(file, config("silent.sh"));
  CHECK(silent.status == SzsStatus::kUnknown);
  CHECK(silent.excerpt.find("no verdict here") != std::string::npos);

  auto start = std::chrono::steady_clock::now();
  SzsResult slow = run_prover(file, config("sleepy.sh", 1));
  double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(slow.status == SzsStatus::kTimeout);
  CHECK(took < 5);
  CHECK(slow.seconds >= 0.9);

  ProverConfig missing = config("theorem.sh");
  missing.command = "/nonexistent/prover %f";
  CHECK(run_prover(file, missing).status == SzsStatus::kError);
  fs::remove_all(dir);
}

TEST_CASE("discharge_refl examples") {
  CHECK(discharge_refl(mk::eq(nat(), T("", numeral(2)), T("", numeral(2)))));
  CHECK(discharge_refl(mk::eq(nat(), T("", "suc (" + numeral(2) + ")"),
                              T("", numeral(3)))));
  CHECK_FALSE(discharge_refl(mk::eq(nat(), T("", "plus zero (" + numeral(2) + ")"),
                                    T("", numeral(2)))));
  // Under a ∀/⇒ prefix; the hypotheses are not used.
  auto body = mk::eq(nat(), mk::var("n"), mk::var("n"));
  CHECK(discharge_refl(logic::mk_forall(
      "n", nat(), mk::implies(logic::mk_false(), body))));
  // Equal after beta.
  CHECK(discharge_refl(mk::eq(nat(), T("", "(\\(x : nat). x) zero"), T("", "zero"))));
  // PER applications.
  auto per = mk::apps(mk::cnst("vect_per", {mk::type_arg(nat())}),
                      {mk::var("r"), mk::var("n")});
  CHECK(discharge_refl(mk::apps(per, {mk::var("x"), mk::var("x")})));
  CHECK_FALSE(discharge_refl(mk::apps(per, {mk::var("x"), mk::var("y")})));
  CHECK_FALSE(discharge_refl(mk::var("p")));
}

// Self-relatedness of every constant is either reflexive or, at function
// types, exactly the typing axiom the translation emits for it.
TEST_CASE("constants are related to themselves") {
  for (std::string name : {"vectors", "rbt-rev-invol", "hlist", "list-app-nil"}) {
    CAPTURE(name);
    auto cp = testkit::check_fixture(name);
    auto pol = make_policy(cp.problem.theory, true);
    PholTheory ph = erase_theory(cp.problem.theory, pol);
    Signature sig = Signature::from_theory(cp.problem.theory);
    int refl = 0, axioms = 0;
    for (const auto& d : cp.problem.theory.declarations) {
      const auto* c = std::get_if<Declaration::TermSym>(&d.value);
      if (!c) continue;
      Context params = check_context(sig, {}, c->params, false).context;
      TermRef t = mk::cnst(c->name, identity_substitution(params));
      Typed typed = infer_type(sig, params, t);
      TermRef tr = erase_term(typed.term, pol);
      TermRef f = bind_context(erase_context(params, pol),
                               per_formula(typed.type, tr, tr, pol));
      bool stated = false;
      for (const auto& e : ph.declarations)
        if (auto* a = std::get_if<Declaration::Axiom>(&e.value))
          stated = stated || alpha_eq(normalize(a->formula), normalize(f));
      bool trivial = discharge_refl(f);
      refl += trivial;
      axioms += stated;
      CHECK_MESSAGE((trivial || stated), c->name.text);
    }
    CHECK(refl > 0);
    CHECK(axioms > 0);
  }
}

TEST_CASE("aggregate") {
  using S = SzsStatus;
  CHECK(aggregate({}) == Overall::kProven);
  CHECK(aggregate({report(S::kTrivialRefl), report(S::kTheorem, false)}) ==
        Overall::kProven);
  CHECK(aggregate({report(S::kTheorem), report(S::kGaveUp, false)}) == Overall::kOpen);
  CHECK(aggregate({report(S::kContradictoryAxioms, false)}) == Overall::kOpen);
  CHECK(aggregate({report(S::kUnknown, false)}) == Overall::kOpen);
  CHECK(aggregate({report(S::kCounterSatisfiable, false)}) == Overall::kOpen);
  CHECK(aggregate({report(S::kCounterSatisfiable), report(S::kTimeout, false)}) ==
        Overall::kRefutedTyping);
  CHECK(aggregate({report(S::kCounterSatisfiable), report(S::kError, false)}) ==
        Overall::kError);
}

TEST_CASE("property: one failure turns Proven into Open") {
  std::mt19937 rng(17);
  for (int round = 0; round < 200; ++round) {
    std::vector<ObligationReport> rs;
    int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
      rs.push_back(report(rng() % 2 ? SzsStatus::kTheorem : SzsStatus::kTrivialRefl,
                          i + 1 < n));
    REQUIRE(aggregate(rs) == Overall::kProven);
    auto flipped = rs;
    std::size_t k = rng() % rs.size();
    flipped[k].result.status = SzsStatus::kTimeout;
    CHECK(aggregate(flipped) == Overall::kOpen);
    flipped[k].result.status = SzsStatus::kError;
    CHECK(aggregate(flipped) == Overall::kError);
  }
}

TEST_CASE("prove dispatches only non-trivial obligations") {
  fs::path dir = scratch_dir("record");
  fs::path log = dir / "calls.log";
  ::setenv("PDHOL_FAKE_LOG", log.c_str(), 1);

  auto cp = testkit::check_fixture("bad_tree");
  Translation t = translate(cp, "bad_tree", "bad_tree.pdhol", true);
  ProverConfig cfg = config("record.sh");
  cfg.working_dir = (dir / "files").string();
  Verdict v = prove(t, cfg);
  REQUIRE(v.obligations.size() == 3);
  CHECK(v.obligations[0].id.text == "bad_tree_tco1");
  CHECK(v.obligations[0].is_tco);
  CHECK_FALSE(v.obligations[2].is_tco);
  CHECK(v.overall == Overall::kProven);
  for (const auto& f : t.files) CHECK(fs::exists(fs::path(cfg.working_dir) / f.file_name));
  std::string calls = testkit::read_file(log.string());
  CHECK(calls.find("bad_tree.tco1.p") != std::string::npos);
  CHECK(calls.find("bad_tree.p") != std::string::npos);

  // Reflexive obligations never reach the prover.
  Obligation refl;
  refl.id = "c_tco1";
  refl.formula = mk::eq(nat(), T("", numeral(2)), T("", numeral(2)));
  refl.provenance.rule = "assumption";
  CheckedProblem small = testkit::check_source(
      testkit::vector_theory() + "conjecture c : zero = zero.\n");
  small.obligations.push_back(refl);
  fs::remove(log);
  Verdict sv = prove(translate(small, "small", "small.pdhol", true), cfg);
  REQUIRE(sv.obligations.size() == 2);
  CHECK(sv.obligations[0].result.status == SzsStatus::kTrivialRefl);
  CHECK(sv.obligations[1].result.status == SzsStatus::kTheorem);
  std::string calls2 = testkit::read_file(log.string());
  CHECK(calls2.find("small.tco1.p") == std::string::npos);
  CHECK(calls2.find("small.p") != std::string::npos);
  ::unsetenv("PDHOL_FAKE_LOG");
  fs::remove_all(dir);
}

TEST_CASE("verdicts from scripted provers") {
  auto bad = testkit::check_fixture("bad_tree");
  Translation t = translate(bad, "bad_tree", "bad_tree.pdhol", true);
  CHECK(prove(t, config("split.sh")).overall == Overall::kOpen);
  CHECK(prove(t, config("countersat.sh")).overall == Overall::kRefutedTyping);
  CHECK(prove(t, config("sleepy.sh", 1, 3)).overall == Overall::kOpen);

  auto fin = testkit::check_fixture("finite-type");
  Verdict fv = prove(translate(fin, "finite-type", "finite-type.pdhol", true),
                     config("contradictory.sh"));
  CHECK(fv.overall == Overall::kOpen);
  CHECK(fv.obligations.back().result.status == SzsStatus::kContradictoryAxioms);

  ProverConfig broken = config("theorem.sh");
  broken.command = "/nonexistent/prover %f";
  CHECK(prove(t, broken).overall == Overall::kError);
}

TEST_CASE("reports do not depend on the number of jobs") {
  auto cp = testkit::check_fixture("list-app-nil");
  Translation t = translate(cp, "list-app-nil", "list-app-nil.pdhol", true);
  REQUIRE(t.files.size() == 4);
  Verdict one = without_times(prove(t, config("jitter.sh", 10, 1)));
  Verdict eight = without_times(prove(t, config("jitter.sh", 10, 8)));
  CHECK(format_text(one) == format_text(eight));
  CHECK(format_json(one) == format_json(eight));
  CHECK(one.overall == Overall::kProven);
}

TEST_CASE("report formats") {
  Verdict v;
  v.problem = "p";
  v.obligations.push_back(report(SzsStatus::kTrivialRefl));
  v.obligations[0].id = "p_tco1";
  v.obligations[0].provenance = "assumption in c";
  v.overall = Overall::kProven;
  std::string text = format_text(v);
  CHECK(text.find("problem: p\n") == 0);
  CHECK(text.find("p_tco1  TrivialRefl") != std::string::npos);
  CHECK(text.find("overall: Proven\n") != std::string::npos);
  std::string json = format_json(v);
  CHECK(json.find("\"problem\": \"p\"") != std::string::npos);
  CHECK(json.find("\"status\": \"TrivialRefl\"") != std::string::npos);
  CHECK(json.find("\"overall\": \"Proven\"") != std::string::npos);
}

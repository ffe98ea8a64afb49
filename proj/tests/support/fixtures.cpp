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

#include "support/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pdhol/surface/diagnostic.hpp"
#include "pdhol/surface/parser.hpp"

namespace pdhol::testkit {

std::string fixture_path(const std::string& name) {
  return std::string(PDHOL_FIXTURES) + "/" + name + ".pdhol";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string joined(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) out += format_diagnostic(d) + "\n";
  return out;
}

}  // namespace

Problem parse_source(const std::string& source, const std::string& label) {
  ParseResult r = parse_problem(source, label);
  if (!r.ok()) throw Error(joined(r.diagnostics));
  return std::move(*r.problem);
}

Problem load_fixture(const std::string& name) {
  std::string path = fixture_path(name);
  return parse_source(read_file(path), path);
}

CheckedProblem check_source(const std::string& source) {
  CheckResult r = check_problem(parse_source(source));
  if (!r.ok()) throw Error(joined(r.diagnostics));
  return std::move(*r.checked);
}

CheckedProblem check_fixture(const std::string& name) {
  CheckResult r = check_problem(load_fixture(name));
  if (!r.ok()) throw Error(joined(r.diagnostics));
  return std::move(*r.checked);
}

std::string numeral(int k) {
  std::string out = "zero";
  for (int i = 0; i < k; ++i) out = i == 0 ? "suc zero" : "suc (" + out + ")";
  return out;
}

std::string vector_theory() {
  std::istringstream in(read_file(fixture_path("vectors")));
  std::string out, line;
  while (std::getline(in, line))
    if (line.rfind("conjecture", 0) != 0) out += line + "\n";
  return out;
}

TermRef term_in(const std::string& theory, const std::string& params,
                const std::string& text) {
  Problem p = parse_source(theory + "\nconjecture probe " + params + " : " +
                           text + ".\n");
  return std::get<Declaration::Conjecture>(p.conjecture->value).formula;
}

TypeRef type_in(const std::string& theory, const std::string& params,
                const std::string& text) {
  Problem p = parse_source(theory + "\nconst probe " + params + " : " + text +
                           ".\n");
  return std::get<Declaration::TermSym>(p.theory.declarations.back().value)
      .type;
}

Context context_in(const std::string& theory, const std::string& params) {
  Problem p =
      parse_source(theory + "\nconjecture probe " + params + " : $true.\n");
  return p.conjecture->params();
}

const std::vector<std::string>& rbt_corpus() {
  static const std::vector<std::string> names = {
      "rbt-rev-invol",        "rbt-rev-invol-base-BTLeaf",
      "rbt-rev-invol-base-RTLeaf", "rbt-rev-invol-RTStep",
      "rbt-rev-invol-BTStep", "bad_tree"};
  return names;
}

std::vector<std::string> all_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(PDHOL_FIXTURES))
    if (e.path().extension() == ".pdhol") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pdhol::testkit

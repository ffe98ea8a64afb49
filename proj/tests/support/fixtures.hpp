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

// Loading the .pdhol files under tests/fixtures.

#ifndef PDHOL_TESTS_SUPPORT_FIXTURES_HPP_
#define PDHOL_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "pdhol/checker/checker.hpp"
#include "pdhol/core/syntax.hpp"

namespace pdhol::testkit {

std::string fixture_path(const std::string& name);  // "vectors" -> .../vectors.pdhol
std::string read_file(const std::string& path);

// Throw Error with the formatted diagnostics on failure.
Problem parse_source(const std::string& source, const std::string& label = "<test>");
Problem load_fixture(const std::string& name);
CheckedProblem check_source(const std::string& source);
CheckedProblem check_fixture(const std::string& name);

// zero, suc zero, suc (suc zero), ...
std::string numeral(int k);
// vectors.pdhol without its conjecture.
std::string vector_theory();
// A term, type or parameter context written in surface syntax against
// `theory`. `params` is a parameter list such as "(A : Type) (n : nat)".
TermRef term_in(const std::string& theory, const std::string& params,
                const std::string& text);
TypeRef type_in(const std::string& theory, const std::string& params,
                const std::string& text);
Context context_in(const std::string& theory, const std::string& params);

// Stems of the red-black tree problems.
const std::vector<std::string>& rbt_corpus();
// Every fixture stem.
std::vector<std::string> all_fixtures();

}  // namespace pdhol::testkit

#endif  // PDHOL_TESTS_SUPPORT_FIXTURES_HPP_

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

#ifndef PDHOL_SURFACE_LEXER_HPP_
#define PDHOL_SURFACE_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pdhol/core/syntax.hpp"
#include "pdhol/surface/diagnostic.hpp"

namespace pdhol::surface {

enum class Tok {
  kIdent,
  kKwType,        // type
  kKwConst,       // const
  kKwAxiom,       // axiom
  kKwSubtype,     // subtype
  kKwConjecture,  // conjecture
  kKwTypeKind,    // Type
  kKwBool,        // o
  kLParen,
  kRParen,
  kColon,
  kDot,
  kArrow,    // ->
  kImplies,  // =>
  kIff,      // <=>
  kEq,       // =
  kEqOpen,   // =[
  kRBracket,
  kLambda,  // backslash
  kForall,  // !
  kExists,  // ?
  kAnd,
  kOr,
  kNot,
  kAssign,  // :=
  kTrue,    // $true
  kFalse,   // $false
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* describe(Tok kind);

// Tokenizes the whole input. On a lexical error the diagnostic is appended
// and the token list ends with kEnd at the error position.
std::vector<Token> lex(std::string_view source,
                       const std::shared_ptr<const std::string>& file,
                       std::vector<Diagnostic>& diags);

}  // namespace pdhol::surface

#endif  // PDHOL_SURFACE_LEXER_HPP_

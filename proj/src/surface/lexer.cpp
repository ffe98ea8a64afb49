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

#include "surface/lexer.hpp"

#include <cctype>
#include <map>

namespace pdhol::surface {
namespace {

bool is_ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

const std::map<std::string_view, Tok>& keywords() {
  static const std::map<std::string_view, Tok> kw = {
      {"type", Tok::kKwType},       {"const", Tok::kKwConst},
      {"axiom", Tok::kKwAxiom},     {"subtype", Tok::kKwSubtype},
      {"conjecture", Tok::kKwConjecture},
      {"Type", Tok::kKwTypeKind},   {"o", Tok::kKwBool},
  };
  return kw;
}

}  // namespace

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kKwType: return "'type'";
    case Tok::kKwConst: return "'const'";
    case Tok::kKwAxiom: return "'axiom'";
    case Tok::kKwSubtype: return "'subtype'";
    case Tok::kKwConjecture: return "'conjecture'";
    case Tok::kKwTypeKind: return "'Type'";
    case Tok::kKwBool: return "'o'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kColon: return "':'";
    case Tok::kDot: return "'.'";
    case Tok::kArrow: return "'->'";
    case Tok::kImplies: return "'=>'";
    case Tok::kIff: return "'<=>'";
    case Tok::kEq: return "'='";
    case Tok::kEqOpen: return "'=['";
    case Tok::kRBracket: return "']'";
    case Tok::kLambda: return "'\\'";
    case Tok::kForall: return "'!'";
    case Tok::kExists: return "'?'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kNot: return "'~'";
    case Tok::kAssign: return "':='";
    case Tok::kTrue: return "'$true'";
    case Tok::kFalse: return "'$false'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view src,
                       const std::shared_ptr<const std::string>& file,
                       std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::uint32_t line = 1;
  std::uint32_t col = 1;

  auto span_at = [&](std::uint32_t l, std::uint32_t c, std::size_t len) {
    return SourceSpan{file, l, c, static_cast<std::uint32_t>(len)};
  };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) {
    return src.substr(i, s.size()) == s;
  };

  static const std::pair<std::string_view, Tok> kPunct[] = {
      {"<=>", Tok::kIff},    {"$true", Tok::kTrue}, {"$false", Tok::kFalse},
      {"->", Tok::kArrow},   {"=>", Tok::kImplies}, {"=[", Tok::kEqOpen},
      {":=", Tok::kAssign},  {"=", Tok::kEq},       {"]", Tok::kRBracket},
      {"(", Tok::kLParen},   {")", Tok::kRParen},   {":", Tok::kColon},
      {".", Tok::kDot},      {"\\", Tok::kLambda},  {"!", Tok::kForall},
      {"?", Tok::kExists},   {"&", Tok::kAnd},      {"|", Tok::kOr},
      {"~", Tok::kNot},
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::uint32_t l0 = line;
    std::uint32_t c0 = col;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      while (j < src.size() && src[j] == '\'') ++j;
      std::string text(src.substr(i, j - i));
      auto kw = keywords().find(text);
      Tok kind = kw == keywords().end() ? Tok::kIdent : kw->second;
      out.push_back(Token{kind, text, span_at(l0, c0, text.size())});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& [text, kind] : kPunct) {
      if (starts(text)) {
        out.push_back(Token{kind, std::string(text), span_at(l0, c0, text.size())});
        advance(text.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<int>(
                                          static_cast<unsigned char>(c)));
    diags.push_back(Diagnostic{Severity::kError,
                               "unexpected character '" + shown + "'",
                               span_at(l0, c0, 1)});
    out.push_back(Token{Tok::kEnd, "", span_at(l0, c0, 0)});
    return out;
  }
  out.push_back(Token{Tok::kEnd, "", span_at(line, col, 0)});
  return out;
}

}  // namespace pdhol::surface

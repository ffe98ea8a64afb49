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

// Bidirectional type checker for PDHOL. Everything decidable by structure
// (plus β/η normalization of term arguments) is decided here; equalities of
// term arguments that do not normalize to the same term, and assumptions of
// instantiated contexts, are returned as obligations for an external prover.

#ifndef PDHOL_CHECKER_CHECKER_HPP_
#define PDHOL_CHECKER_CHECKER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdhol/core/syntax.hpp"
#include "pdhol/surface/diagnostic.hpp"

namespace pdhol {

struct Provenance {
  std::string rule;  // "type-equality", "assumption", "subtype-nonempty"
  Name declaration;
  SourceSpan span;

  // "type-equality in cons_len at file:3:14"
  std::string describe() const;
};

struct Obligation {
  Name id;  // filled by check_problem: <conjecture>_tco<k>
  Context context;
  TermRef formula;
  Provenance provenance;
  // Number of theory declarations the obligation may use (the prefix
  // preceding the declaration that produced it).
  std::size_t theory_prefix = 0;
};

struct EqResult {
  enum class Kind { kEqual, kUnequal, kConditional };

  Kind kind = Kind::kEqual;
  std::string reason;                   // kUnequal only
  std::vector<Obligation> obligations;  // kConditional only

  bool equal() const { return kind == Kind::kEqual; }
  bool unequal() const { return kind == Kind::kUnequal; }
};

class CheckError : public Error {
 public:
  CheckError(std::string message, SourceSpan span)
      : Error(message), span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// The symbols visible at some point of a theory.
class Signature {
 public:
  struct Symbol {
    bool is_type = false;
    Context params;
    TypeRef type;  // term symbols only
    std::size_t decl_index = 0;
  };

  // Registers every declaration without checking it; subtype definitions
  // contribute their elaborated symbols.
  static Signature from_theory(const Theory& theory);

  void add(const Declaration& decl, std::size_t decl_index);
  const Symbol* find(const Name& name) const;
  bool contains(const Name& name) const;

 private:
  std::map<Name, Symbol> symbols_;
  std::map<Name, std::size_t> labels_;
};

struct Typed {
  TermRef term;  // with every equality annotated
  TypeRef type;
  std::vector<Obligation> obligations;
};

struct CheckedType {
  TypeRef type;
  std::vector<Obligation> obligations;
};

struct CheckedContext {
  Context context;
  std::vector<Obligation> obligations;
};

// All of these throw CheckError on ill-formed input.
Typed infer_type(const Signature& sig, const Context& ctx, const TermRef& t);
Typed check_term(const Signature& sig, const Context& ctx, const TermRef& t,
                 const TypeRef& expected);
CheckedType check_type(const Signature& sig, const Context& ctx,
                       const TypeRef& a);
// Checks `local` as an extension of `ctx`. Assumptions are rejected unless
// `allow_assumptions` is set.
CheckedContext check_context(const Signature& sig, const Context& ctx,
                             const Context& local, bool allow_assumptions);

EqResult type_equal(const Signature& sig, const Context& ctx, const TypeRef& a,
                    const TypeRef& b);

// `target` must already be checked (equalities annotated).
std::vector<Obligation> check_subst(const Signature& sig, const Context& ctx,
                                    const Substitution& delta,
                                    const Context& target);

// Checks carrier and predicate and returns the nonemptiness obligation
// ∃v:A. p v over the definition's parameters.
std::vector<Obligation> check_subtype_def(const Signature& sig,
                                          const Context& ctx,
                                          const Declaration::SubtypeDef& def);

struct CheckedProblem {
  Problem problem;  // equalities annotated
  std::vector<Obligation> obligations;
};

struct CheckResult {
  std::optional<CheckedProblem> checked;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return checked.has_value(); }
};

CheckResult check_problem(const Problem& problem);

// Label used as the obligation-id prefix: the conjecture's label, or
// "problem" if there is none.
Name obligation_prefix(const Problem& problem);

}  // namespace pdhol

#endif  // PDHOL_CHECKER_CHECKER_HPP_

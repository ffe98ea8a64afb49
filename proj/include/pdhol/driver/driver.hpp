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

// From a checked problem to TH1 files, prover runs and a verdict.

#ifndef PDHOL_DRIVER_DRIVER_HPP_
#define PDHOL_DRIVER_DRIVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pdhol/checker/checker.hpp"
#include "pdhol/erasure/erasure.hpp"

namespace pdhol {

enum class SzsStatus {
  kTheorem,
  kCounterSatisfiable,
  kContradictoryAxioms,
  kTimeout,
  kGaveUp,
  kError,
  kUnknown,
  kTrivialRefl,
};

std::string to_string(SzsStatus status);

struct SzsResult {
  SzsStatus status = SzsStatus::kUnknown;
  double seconds = 0;
  std::string excerpt;  // tail of the prover output
};

// Status of the first `SZS status <Ident>` occurrence; Unknown if there is
// none or the word is not one of ours.
SzsStatus parse_szs(const std::string& output);

struct ProverConfig {
  // Run through /bin/sh -c. %f is replaced by the quoted problem path, %t by
  // the timeout in seconds, %% by a percent sign.
  std::string command;
  int timeout_seconds = 60;
  int jobs = 1;
  std::string working_dir;  // where problem files are written; empty = temp
};

// Empty on success, otherwise what is wrong with the configuration.
std::optional<std::string> validate(const ProverConfig& cfg);

std::string expand_command(const std::string& tmpl, const std::string& file,
                           int timeout_seconds);

SzsResult run_prover(const std::string& file, const ProverConfig& cfg);

// A command template for the first known TH1 prover on PATH.
std::optional<std::string> find_prover_on_path();

// True iff, below its ∀ and ⇒ prefix and after normalization, the formula
// is an equality or a PER application with alpha-equal operands.
bool discharge_refl(const TermRef& formula);

// One TH1 file of a translated problem.
struct Th1File {
  std::string file_name;  // <stem>.p or <stem>.tco<k>.p
  Name id;                // obligation id, or the conjecture label
  bool is_tco = false;
  std::string provenance;
  Declaration goal;       // erased conjecture
  std::string text;
};

struct Translation {
  std::string problem;  // stem
  std::vector<Th1File> files;  // obligations in order, then the conjecture
  double seconds = 0;
};

// Erases the checked problem and renders one file per obligation plus the
// main conjecture. Throws Error if the problem has no conjecture.
Translation translate(const CheckedProblem& checked, const std::string& stem,
                      const std::string& source_label, bool collapse);

enum class Overall { kProven, kOpen, kRefutedTyping, kError };

std::string to_string(Overall overall);

struct ObligationReport {
  Name id;
  bool is_tco = false;
  std::string provenance;
  SzsResult result;
};

struct Verdict {
  std::string problem;
  std::vector<ObligationReport> obligations;
  Overall overall = Overall::kOpen;
};

// Error beats a refuted TCO, which beats anything not proven (Open);
// Proven iff every entry is Theorem or TrivialRefl.
Overall aggregate(const std::vector<ObligationReport>& reports);

// Writes the files into cfg.working_dir (or a fresh temporary directory),
// discharges reflexive TCOs and runs the prover on the rest, up to
// cfg.jobs at a time. Report order follows the translation.
Verdict prove(const Translation& translation, const ProverConfig& cfg);

std::string format_text(const Verdict& verdict);
std::string format_json(const Verdict& verdict);

}  // namespace pdhol

#endif  // PDHOL_DRIVER_DRIVER_HPP_

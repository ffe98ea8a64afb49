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

#include "pdhol/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdhol/checker/checker.hpp"
#include "pdhol/driver/driver.hpp"
#include "pdhol/surface/parser.hpp"
#include "pdhol/surface/printer.hpp"

namespace pdhol {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> inputs;
  std::string out_dir;
  bool no_collapse = false;
  int jobs = 1;
  int timeout = 60;
  std::string prover_cmd;
  std::string format = "text";
};

std::string millis(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", seconds * 1000);
  return buf;
}

// Parses and checks one input; diagnostics go to `err`.
std::optional<CheckedProblem> load(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot read file\n";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_problem(buf.str(), path);
  for (const auto& d : parsed.diagnostics) err << format_diagnostic(d) << "\n";
  if (!parsed.ok()) return std::nullopt;
  CheckResult checked = check_problem(*parsed.problem);
  for (const auto& d : checked.diagnostics) err << format_diagnostic(d) << "\n";
  if (!checked.ok()) return std::nullopt;
  return std::move(*checked.checked);
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

int check_one(const std::string& path, const Options& opt, std::ostream& out,
              std::ostream& err, nlohmann::ordered_json* json) {
  auto checked = load(path, err);
  if (!checked) return kExitInput;
  PerPolicy policy = make_policy(checked->problem.theory, !opt.no_collapse);
  std::size_t open = 0;
  nlohmann::ordered_json obs = nlohmann::ordered_json::array();
  if (!json) out << path << ": " << checked->obligations.size() << " obligations\n";
  for (const auto& ob : checked->obligations) {
    Declaration erased = erase_obligation(ob, policy);
    bool trivial =
        discharge_refl(std::get<Declaration::Conjecture>(erased.value).formula);
    if (!trivial) ++open;
    std::string status = trivial ? "TrivialRefl" : "Open";
    if (json) {
      nlohmann::ordered_json o;
      o["id"] = ob.id.text;
      o["provenance"] = ob.provenance.describe();
      o["status"] = status;
      o["seconds"] = 0.0;
      obs.push_back(std::move(o));
    } else {
      out << "  " << ob.id.text << "  " << status << "  "
          << ob.provenance.describe() << "\n";
      std::string ctx = print_context(ob.context);
      out << "    " << (ctx.empty() ? "" : ctx + " ") << "|- "
          << print_term(ob.formula) << "\n";
    }
  }
  if (json) {
    (*json)["problem"] = stem_of(path);
    (*json)["obligations"] = std::move(obs);
    (*json)["overall"] = open ? "Open" : "Checked";
  } else {
    out << open << " open obligations\n";
  }
  return open ? kExitOpen : kExitOk;
}

int translate_one(const std::string& path, const Options& opt,
                  std::ostream& out, std::ostream& err) {
  auto checked = load(path, err);
  if (!checked) return kExitInput;
  if (!checked->problem.conjecture) {
    err << path << ": error: missing conjecture\n";
    return kExitInput;
  }
  Translation t = translate(*checked, stem_of(path), path, !opt.no_collapse);
  fs::path dir = opt.out_dir.empty() ? fs::path(".") : fs::path(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const auto& f : t.files) {
    fs::path p = dir / f.file_name;
    std::ofstream o(p, std::ios::binary);
    o << f.text;
    if (!o) {
      err << p.string() << ": error: cannot write file\n";
      return kExitInput;
    }
    out << p.string() << "\n";
  }
  out << "translation of " << t.problem << ": " << millis(t.seconds) << "\n";
  return kExitOk;
}

int prove_one(const std::string& path, const Options& opt, std::ostream& out,
              std::ostream& err, nlohmann::ordered_json* json) {
  auto checked = load(path, err);
  if (!checked) return kExitInput;
  if (!checked->problem.conjecture) {
    err << path << ": error: missing conjecture\n";
    return kExitInput;
  }
  ProverConfig cfg;
  cfg.command = opt.prover_cmd;
  cfg.timeout_seconds = opt.timeout;
  cfg.jobs = opt.jobs;
  if (!opt.out_dir.empty()) cfg.working_dir = opt.out_dir;
  if (auto bad = validate(cfg)) {
    err << "error: " << *bad << "\n";
    return kExitInput;
  }
  Translation t = translate(*checked, stem_of(path), path, !opt.no_collapse);
  (json ? err : out) << "translation of " << t.problem << ": "
                     << millis(t.seconds) << "\n";
  Verdict v = prove(t, cfg);
  if (json)
    *json = nlohmann::ordered_json::parse(format_json(v));
  else
    out << format_text(v);
  switch (v.overall) {
    case Overall::kProven: return kExitOk;
    case Overall::kError: return kExitInput;
    default: return kExitOpen;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"PDHOL checker, translator and prover front end", "pdhol"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", opt.inputs, "PDHOL problem files")->required();
    sub->add_flag("--no-per-collapse", opt.no_collapse,
                  "keep PERs at types whose PER is equality");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "type-check and list obligations");
  add_common(check);
  add_format(check);

  CLI::App* translate = app.add_subcommand("translate", "write TH1 problem files");
  add_common(translate);
  translate->add_option("-o,--output", opt.out_dir, "output directory");

  CLI::App* prove = app.add_subcommand("prove", "translate and run a prover");
  add_common(prove);
  add_format(prove);
  prove->add_option("-o,--output", opt.out_dir, "directory for the TH1 files");
  prove->add_option("--jobs", opt.jobs, "parallel prover runs")
      ->check(CLI::PositiveNumber);
  prove->add_option("--timeout", opt.timeout, "seconds per obligation")
      ->check(CLI::PositiveNumber);
  prove->add_option("--prover-cmd", opt.prover_cmd,
                    "prover command template (%f file, %t timeout)")
      ->envname("PDHOL_PROVER");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  bool as_json = opt.format == "json";
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  int code = kExitOk;
  for (const auto& path : opt.inputs) {
    nlohmann::ordered_json report;
    nlohmann::ordered_json* j = as_json ? &report : nullptr;
    int rc;
    try {
      if (check->parsed())
        rc = check_one(path, opt, out, err, j);
      else if (translate->parsed())
        rc = translate_one(path, opt, out, err);
      else
        rc = prove_one(path, opt, out, err, j);
    } catch (const Error& e) {
      err << path << ": error: " << e.what() << "\n";
      rc = kExitInput;
    }
    if (j && !report.is_null()) reports.push_back(std::move(report));
    code = std::max(code, rc);
  }
  if (as_json && !translate->parsed()) {
    if (reports.size() == 1)
      out << reports[0].dump(2) << "\n";
    else
      out << reports.dump(2) << "\n";
  }
  return code;
}

}  // namespace pdhol

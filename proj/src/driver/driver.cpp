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

#include "pdhol/driver/driver.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pdhol/core/logic.hpp"
#include "pdhol/core/ops.hpp"
#include "pdhol/tptp/th1.hpp"

namespace pdhol {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

std::string tail(const std::string& s, std::size_t n) {
  return s.size() <= n ? s : s.substr(s.size() - n);
}

}  // namespace

std::string to_string(SzsStatus status) {
  switch (status) {
    case SzsStatus::kTheorem: return "Theorem";
    case SzsStatus::kCounterSatisfiable: return "CounterSatisfiable";
    case SzsStatus::kContradictoryAxioms: return "ContradictoryAxioms";
    case SzsStatus::kTimeout: return "Timeout";
    case SzsStatus::kGaveUp: return "GaveUp";
    case SzsStatus::kError: return "Error";
    case SzsStatus::kUnknown: return "Unknown";
    case SzsStatus::kTrivialRefl: return "TrivialRefl";
  }
  return "Unknown";
}

std::string to_string(Overall overall) {
  switch (overall) {
    case Overall::kProven: return "Proven";
    case Overall::kOpen: return "Open";
    case Overall::kRefutedTyping: return "Refuted-typing";
    case Overall::kError: return "Error";
  }
  return "Error";
}

SzsStatus parse_szs(const std::string& output) {
  static const std::regex re(R"(SZS status\s+([A-Za-z]+))");
  std::smatch m;
  if (!std::regex_search(output, m, re)) return SzsStatus::kUnknown;
  const std::string word = m[1];
  // TrivialRefl is never reported by a prover.
  for (SzsStatus s : {SzsStatus::kTheorem, SzsStatus::kCounterSatisfiable,
                      SzsStatus::kContradictoryAxioms, SzsStatus::kTimeout,
                      SzsStatus::kGaveUp, SzsStatus::kError})
    if (word == to_string(s)) return s;
  return SzsStatus::kUnknown;
}

std::optional<std::string> validate(const ProverConfig& cfg) {
  if (cfg.command.empty()) return "no prover command configured";
  if (cfg.command.find("%f") == std::string::npos)
    return "prover command must contain %f";
  if (cfg.timeout_seconds <= 0) return "timeout must be positive";
  if (cfg.jobs < 1) return "jobs must be at least 1";
  return std::nullopt;
}

std::string expand_command(const std::string& tmpl, const std::string& file,
                           int timeout_seconds) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '%' || i + 1 == tmpl.size()) {
      out += tmpl[i];
      continue;
    }
    char c = tmpl[++i];
    if (c == 'f')
      out += shell_quote(file);
    else if (c == 't')
      out += std::to_string(timeout_seconds);
    else if (c == '%')
      out += '%';
    else
      out += std::string("%") + c;
  }
  return out;
}

SzsResult run_prover(const std::string& file, const ProverConfig& cfg) {
  SzsResult result;
  auto start = Clock::now();
  std::string cmd = expand_command(cfg.command, file, cfg.timeout_seconds);

  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) {
    result.status = SzsStatus::kError;
    result.excerpt = "cannot create pipe";
    return result;
  }
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    result.status = SzsStatus::kError;
    result.excerpt = "cannot fork";
    return result;
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(fds[1]);

  auto deadline = start + std::chrono::seconds(cfg.timeout_seconds);
  auto remaining_ms = [&] {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    return static_cast<int>(std::max<long long>(0, left.count()));
  };

  std::string output;
  bool timed_out = false;
  char buf[4096];
  for (;;) {
    pollfd p{fds[0], POLLIN, 0};
    int left = remaining_ms();
    if (left == 0) {
      timed_out = true;
      break;
    }
    int r = poll(&p, 1, left);
    if (r < 0 && errno == EINTR) continue;
    if (r == 0) {
      timed_out = true;
      break;
    }
    ssize_t n = read(fds[0], buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    if (output.size() < (1u << 20)) output.append(buf, static_cast<std::size_t>(n));
  }

  int status = 0;
  if (!timed_out) {
    // Output closed; give the process until the deadline to exit.
    while (waitpid(pid, &status, WNOHANG) == 0) {
      if (remaining_ms() == 0) {
        timed_out = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  if (timed_out) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
    waitpid(pid, &status, 0);
  }
  close(fds[0]);
  result.seconds = seconds_since(start);

  static const std::regex line_re(R"([^\n]*SZS status[^\n]*)");
  std::smatch m;
  if (std::regex_search(output, m, line_re)) {
    result.status = parse_szs(output);
    result.excerpt = m[0];
    return result;
  }
  result.excerpt = tail(output, 400);
  if (timed_out)
    result.status = SzsStatus::kTimeout;
  else if (WIFEXITED(status) &&
           (WEXITSTATUS(status) == 126 || WEXITSTATUS(status) == 127))
    result.status = SzsStatus::kError;
  else
    result.status = SzsStatus::kUnknown;
  return result;
}

std::optional<std::string> find_prover_on_path() {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  static const std::pair<const char*, const char*> known[] = {
      {"vampire", "vampire --mode portfolio -t %t %f"},
      {"zipperposition", "zipperposition --timeout %t %f"},
      {"leo3", "leo3 %f -t %t"},
  };
  for (const auto& [exe, tmpl] : known) {
    std::stringstream dirs(path);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      fs::path p = fs::path(dir) / exe;
      if (access(p.c_str(), X_OK) == 0) return std::string(tmpl);
    }
  }
  return std::nullopt;
}

bool discharge_refl(const TermRef& formula) {
  TermRef t = formula;
  for (;;) {
    if (auto q = logic::match_forall(t)) {
      t = q->body;
    } else if (auto* i = std::get_if<Term::Implies>(&t->node)) {
      t = i->rhs;
    } else {
      break;
    }
  }
  try {
    t = normalize(t);
  } catch (const Error&) {
    return false;
  }
  if (auto* e = std::get_if<Term::Eq>(&t->node)) return alpha_eq(e->lhs, e->rhs);

  std::vector<TermRef> args;
  TermRef head = t;
  while (auto* a = std::get_if<Term::App>(&head->node)) {
    args.push_back(a->arg);
    head = a->fun;
  }
  if (args.size() < 2) return false;
  const Name* name = nullptr;
  if (auto* c = std::get_if<Term::Const>(&head->node)) name = &c->symbol;
  if (auto* v = std::get_if<Term::Var>(&head->node)) name = &v->name;
  const std::string suffix = "_per";
  if (!name || name->text.size() <= suffix.size() ||
      name->text.compare(name->text.size() - suffix.size(), suffix.size(),
                         suffix) != 0)
    return false;
  // args are innermost-last: args[0] is the right operand.
  return alpha_eq(args[0], args[1]);
}

Translation translate(const CheckedProblem& checked, const std::string& stem,
                      const std::string& source_label, bool collapse) {
  if (!checked.problem.conjecture) throw Error("missing conjecture");
  auto start = Clock::now();
  Translation out;
  out.problem = stem;
  PerPolicy policy = make_policy(checked.problem.theory, collapse);
  PholTheory theory = erase_theory(checked.problem.theory, policy);
  const Name& label = checked.problem.conjecture->name();

  for (std::size_t k = 0; k < checked.obligations.size(); ++k) {
    const Obligation& ob = checked.obligations[k];
    Th1File f;
    f.file_name = stem + ".tco" + std::to_string(k + 1) + ".p";
    f.id = ob.id;
    f.is_tco = true;
    f.provenance = ob.provenance.describe();
    f.goal = erase_obligation(ob, policy);
    f.text = emit_th1(theory.prefix(ob.theory_prefix), f.goal,
                      {"source: " + source_label, "obligation-of: " + label.text,
                       "provenance: " + f.provenance});
    out.files.push_back(std::move(f));
  }

  Th1File main;
  main.file_name = stem + ".p";
  main.id = label;
  main.provenance = "conjecture " + label.text;
  main.goal = erase_conjecture(*checked.problem.conjecture, policy);
  main.text = emit_th1(theory.declarations, main.goal,
                       {"source: " + source_label,
                        "provenance: " + main.provenance});
  out.files.push_back(std::move(main));
  out.seconds = seconds_since(start);
  return out;
}

Overall aggregate(const std::vector<ObligationReport>& reports) {
  bool error = false;
  bool refuted = false;
  bool open = false;
  for (const auto& r : reports) {
    switch (r.result.status) {
      case SzsStatus::kTheorem:
      case SzsStatus::kTrivialRefl:
        break;
      case SzsStatus::kError:
        error = true;
        break;
      case SzsStatus::kCounterSatisfiable:
        if (r.is_tco)
          refuted = true;
        else
          open = true;
        break;
      default:
        open = true;
    }
  }
  if (error) return Overall::kError;
  if (refuted) return Overall::kRefutedTyping;
  if (open) return Overall::kOpen;
  return Overall::kProven;
}

Verdict prove(const Translation& translation, const ProverConfig& cfg) {
  fs::path dir = cfg.working_dir;
  if (dir.empty()) {
    std::string tmpl = (fs::temp_directory_path() / "pdhol-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw Error("cannot create a temporary directory");
    dir = tmpl;
  }
  fs::create_directories(dir);

  Verdict verdict;
  verdict.problem = translation.problem;
  std::vector<std::string> paths;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < translation.files.size(); ++i) {
    const Th1File& f = translation.files[i];
    fs::path p = dir / f.file_name;
    std::ofstream(p, std::ios::binary) << f.text;
    paths.push_back(p.string());
    ObligationReport r;
    r.id = f.id;
    r.is_tco = f.is_tco;
    r.provenance = f.provenance;
    const auto& goal = std::get<Declaration::Conjecture>(f.goal.value);
    if (f.is_tco && discharge_refl(goal.formula))
      r.result.status = SzsStatus::kTrivialRefl;
    else
      pending.push_back(i);
    verdict.obligations.push_back(std::move(r));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next++;
      if (k >= pending.size()) return;
      std::size_t i = pending[k];
      verdict.obligations[i].result = run_prover(paths[i], cfg);
    }
  };
  std::size_t n = std::min<std::size_t>(std::max(cfg.jobs, 1), pending.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  verdict.overall = aggregate(verdict.obligations);
  return verdict;
}

std::string format_text(const Verdict& verdict) {
  std::ostringstream out;
  out << "problem: " << verdict.problem << "\n";
  for (const auto& r : verdict.obligations) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.result.seconds);
    out << "  " << r.id.text << "  " << to_string(r.result.status) << "  "
        << secs << "s  " << r.provenance << "\n";
  }
  out << "overall: " << to_string(verdict.overall) << "\n";
  return out.str();
}

std::string format_json(const Verdict& verdict) {
  nlohmann::ordered_json j;
  j["problem"] = verdict.problem;
  j["obligations"] = nlohmann::ordered_json::array();
  for (const auto& r : verdict.obligations) {
    nlohmann::ordered_json o;
    o["id"] = r.id.text;
    o["provenance"] = r.provenance;
    o["status"] = to_string(r.result.status);
    o["seconds"] = r.result.seconds;
    j["obligations"].push_back(std::move(o));
  }
  j["overall"] = to_string(verdict.overall);
  return j.dump(2) + "\n";
}

}  // namespace pdhol

/*
 * Copyright 2026 The aptc-ws Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// aptc: check, lts and derive-ab over .aptc models.
// Exit status: 0 every check holds, 1 some check fails, 2 any error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aptc/composition.hpp"
#include "aptc/report.hpp"
#include "aptc/semantics.hpp"

namespace {

using namespace aptc;

constexpr int kFail = 1;
constexpr int kError = 2;

struct Flags {
  std::string comm, step, round, shadow;
  std::optional<std::size_t> max_states;
};

void add_config_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--comm-policy", f.comm, "binary | chained");
  cmd->add_option("--step-mode", f.step, "interleave | step");
  cmd->add_option("--round-mode", f.round, "overlap | barrier");
  cmd->add_option("--shadow-policy", f.shadow, "strict | loose");
  cmd->add_option("--max-states", f.max_states, "state budget per exploration");
}

template <typename T, typename Parse>
void set_override(std::optional<T>& slot, const std::string& word, Parse parse, const char* flag) {
  if (word.empty()) return;
  slot = parse(word);
  if (!slot) throw Error(std::string("invalid value '") + word + "' for " + flag);
}

ConfigOverrides overrides_of(const Flags& f) {
  ConfigOverrides o;
  set_override(o.comm_policy, f.comm, parse_comm_policy, "--comm-policy");
  set_override(o.step_mode, f.step, parse_step_mode, "--step-mode");
  set_override(o.round_mode, f.round, parse_round_mode, "--round-mode");
  set_override(o.shadow_policy, f.shadow, parse_shadow_policy, "--shadow-policy");
  o.max_states = f.max_states;
  return o;
}

Model load(const std::string& path) {
  Model m;
  try {
    m = load_model_file(path);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
  auto violations = validate_model(m);
  if (!violations.empty()) {
    std::string msg = path + ": invalid model";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw Error(msg);
  }
  for (const auto* list : {&m.processes, &m.specs})
    for (const auto& p : *list) {
      auto g = guardedness_check(p);
      if (!g.guarded) throw Error(path + ": unguarded recursion in " + p.name);
    }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"aptc: step-semantics verification of web service compositions"};
  app.require_subcommand(1);

  std::string path;
  Flags flags;
  bool json = false;

  auto* check = app.add_subcommand("check", "run every check goal in a model");
  bool rooted = false;
  check->add_option("file", path, "model file")->required();
  add_config_flags(check, flags);
  check->add_flag("--rooted", rooted, "use rooted branching bisimulation for ~bb goals");
  check->add_flag("--json", json, "emit the run report as JSON");

  auto* lts = app.add_subcommand("lts", "export the transition system of a system");
  std::string system, format = "dot";
  bool minimize_flag = false, prune_flag = false;
  lts->add_option("file", path, "model file")->required();
  lts->add_option("--system", system, "system, process or spec name")->required();
  lts->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  lts->add_flag("--minimize", minimize_flag, "quotient by branching bisimulation");
  lts->add_flag("--prune-dead", prune_flag, "remove states that cannot avoid deadlock");
  add_config_flags(lts, flags);

  auto* ab = app.add_subcommand("derive-ab", "derive the abstract process of an orchestration");
  std::string wso;
  ab->add_option("file", path, "model file")->required();
  ab->add_option("--wso", wso, "orchestration name")->required();
  ab->add_flag("--json", json, "emit JSON");
  add_config_flags(ab, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    const Model model = load(path);
    const ConfigOverrides ov = overrides_of(flags);

    if (check->parsed()) {
      RunOptions opts{ov, rooted};
      RunReport report = run_checks(model, opts, path);
      std::cout << (json ? report_json(report) : report_text(report));
      return report.passed() ? 0 : kFail;
    }
    if (lts->parsed()) {
      StepLTS l = generate_lts(system_term(model, system), model, ov.apply(Config{}));
      if (prune_flag) l = prune_dead(l);
      if (minimize_flag) l = minimize(l, Reduction::Branching);
      std::cout << (format == "json" ? to_json(l) : to_dot(l, system));
      return 0;
    }
    AbDef def = derive_ab(wso_def(model, wso), model, ov.apply(Config{}));
    std::cout << (json ? ab_json(def) : ab_text(def));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

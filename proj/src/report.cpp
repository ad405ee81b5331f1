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

#include "aptc/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aptc/semantics.hpp"

namespace aptc {

using json = nlohmann::ordered_json;

bool RunReport::passed() const {
  for (const auto& c : checks)
    if (!c.verdict.holds) return false;
  return true;
}

StepLTS operand_lts(const Model& model, const Operand& operand, const Config& config,
                    std::vector<std::string>* notes) {
  if (!operand.abstract_of) return generate_lts(system_term(model, operand.name), model, config);
  AbDef ab = derive_ab(wso_def(model, operand.name), model, config);
  if (notes && ab.claim_note) notes->push_back(*ab.claim_note);
  return std::move(ab.behavior);
}

CheckResult run_check(const Model& model, const CheckGoal& goal, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ConfigOverrides ov = goal.overrides.merged(options.overrides);
  CheckResult r;
  r.goal = goal.label();
  r.config = ov.apply(Config{});
  r.pruned = ov.prune_dead.value_or(true);
  r.relation = goal.relation;
  if (options.rooted && r.relation == Relation::Branching) r.relation = Relation::RootedBranching;

  StepLTS left = operand_lts(model, goal.left, r.config, &r.notes);
  StepLTS right = operand_lts(model, goal.right, r.config, &r.notes);
  if (r.pruned) {
    left = prune_dead(left);
    right = prune_dead(right);
  }
  r.left_states = left.num_states();
  r.right_states = right.num_states();
  r.verdict = compare(left, right, r.relation);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RunReport run_checks(const Model& model, const RunOptions& options, std::string source) {
  RunReport report;
  report.source = std::move(source);
  for (const auto& goal : model.checks) report.checks.push_back(run_check(model, goal, options));
  return report;
}

namespace {

std::string config_str(const Config& c) {
  std::ostringstream os;
  os << to_string(c.comm_policy) << ", " << to_string(c.step_mode) << ", "
     << to_string(c.round_mode) << ", " << to_string(c.shadow_policy);
  return os.str();
}

json step_json(const Step& s) { return s.empty() ? json::array({"tau"}) : json(s); }

}  // namespace

std::string report_text(const RunReport& report) {
  std::ostringstream os;
  if (!report.source.empty()) os << report.source << "\n";
  for (const auto& c : report.checks) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3fs", c.seconds);
    os << (c.verdict.holds ? "PASS" : "FAIL") << "  check " << c.goal << "  ("
       << to_string(c.relation) << "; " << config_str(c.config)
       << (c.pruned ? "; pruned" : "") << "; states " << c.left_states << "/"
       << c.right_states << "; " << secs << ")\n";
    for (const auto& n : c.notes) os << "  note: " << n << "\n";
    if (const auto& cx = c.verdict.counterexample) {
      os << "  trace:";
      if (cx->trace.empty()) os << " (empty)";
      for (const auto& s : cx->trace) os << " " << step_str(s);
      os << "\n  " << cx->reason << "\n";
    }
  }
  std::size_t ok = 0;
  for (const auto& c : report.checks) ok += c.verdict.holds;
  os << ok << "/" << report.checks.size() << " checks hold\n";
  return os.str();
}

std::string report_json(const RunReport& report) {
  json j;
  j["source"] = report.source;
  j["status"] = report.passed() ? "pass" : "fail";
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e;
    e["goal"] = c.goal;
    e["relation"] = std::string(to_string(c.relation));
    e["config"] = {{"comm_policy", std::string(to_string(c.config.comm_policy))},
                   {"step_mode", std::string(to_string(c.config.step_mode))},
                   {"round_mode", std::string(to_string(c.config.round_mode))},
                   {"shadow_policy", std::string(to_string(c.config.shadow_policy))},
                   {"max_states", c.config.max_states},
                   {"prune_dead", c.pruned}};
    e["holds"] = c.verdict.holds;
    e["states"] = {{"left", c.left_states}, {"right", c.right_states}};
    if (c.verdict.witness)
      e["witness"] = {{"blocks", c.verdict.witness->blocks}, {"block", c.verdict.witness->block}};
    if (const auto& cx = c.verdict.counterexample) {
      json trace = json::array();
      for (const auto& s : cx->trace) trace.push_back(step_json(s));
      e["counterexample"] = {{"trace", trace},
                             {"distinguishing", step_json(cx->distinguishing)},
                             {"side", cx->side == Side::Left ? "left" : "right"},
                             {"left_state", cx->left_state},
                             {"right_state", cx->right_state},
                             {"reason", cx->reason}};
    }
    e["notes"] = c.notes;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string ab_text(const AbDef& ab) {
  std::string out = ab.presentation ? ab.presentation_text() : to_dot(ab.behavior, ab_name(ab.source));
  if (ab.claim_note) out += "note: " + *ab.claim_note + "\n";
  return out;
}

std::string ab_json(const AbDef& ab) {
  json j;
  j["source"] = ab.source;
  j["name"] = ab_name(ab.source);
  if (ab.presentation) {
    json eqs = json::array();
    for (const auto& [v, t] : ab.presentation->equations)
      eqs.push_back({{"variable", v}, {"term", render_term(t)}});
    j["presentation"] = std::move(eqs);
  } else {
    j["presentation"] = nullptr;
  }
  j["behavior"] = json::parse(to_json(ab.behavior));
  j["note"] = ab.claim_note ? json(*ab.claim_note) : json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace aptc

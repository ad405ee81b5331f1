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

#pragma once

#include <string>
#include <vector>

#include "aptc/composition.hpp"
#include "aptc/config.hpp"
#include "aptc/equivalence.hpp"
#include "aptc/model.hpp"

namespace aptc {

struct RunOptions {
  ConfigOverrides overrides;  // applied after each goal's own overrides
  bool rooted = false;        // upgrade ~bb goals to rooted branching
};

struct CheckResult {
  std::string goal;
  Relation relation = Relation::Branching;
  Config config;
  bool pruned = true;
  Verdict verdict;
  std::size_t left_states = 0;
  std::size_t right_states = 0;
  double seconds = 0;  // text report only; JSON stays byte-stable
  std::vector<std::string> notes;
};

struct RunReport {
  std::string source;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// LTS of a check operand: a named system/process/spec, or ab(W).
StepLTS operand_lts(const Model& model, const Operand& operand, const Config& config,
                    std::vector<std::string>* notes = nullptr);

CheckResult run_check(const Model& model, const CheckGoal& goal, const RunOptions& options);
RunReport run_checks(const Model& model, const RunOptions& options, std::string source = {});

std::string report_text(const RunReport& report);
std::string report_json(const RunReport& report);

std::string ab_text(const AbDef& ab);
std::string ab_json(const AbDef& ab);

}  // namespace aptc

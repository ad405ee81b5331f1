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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aptc/config.hpp"
#include "aptc/equivalence.hpp"
#include "aptc/lts.hpp"
#include "aptc/model.hpp"

namespace aptc {

struct WsoDef {
  std::string process;
  NameSet internal;
  TermPtr claimed;  // may be null
};

struct AbDef {
  std::string source;
  StepLTS behavior;
  std::optional<RecursiveSpec> presentation;
  /// Set when the orchestration claims an abstract behaviour that the
  /// derived one does not match.
  std::optional<std::string> claim_note;

  /// "ABA = A2 . A5 . ABA", one equation per line, or empty.
  std::string presentation_text() const;
};

struct WsDef {
  std::string process;
  std::string serves;                   // orchestration name, may be empty
  std::vector<std::string> operations;  // non-shadow action names, sorted
};

struct WscContract {
  std::string name;
  std::vector<ContractPair> pairs;
  std::string protocol;
};

struct CompositionModel {
  std::string name;
  std::vector<WsoDef> wsos;
  std::vector<WsDef> wss;
  std::vector<std::string> parts;  // every participant, declaration order
  std::optional<WscContract> contract;
  NameSet hide_set;
  std::string hide_ref;
  NameSet encaps_set;
  std::string encaps_ref;  // empty: defaulted to dom(gamma)
};

WsoDef wso_def(const Model& model, const std::string& process);
WsDef ws_def(const Model& model, const std::string& process);
CompositionModel composition_model(const Model& model, const std::string& name);

/// Name of the abstract process for an orchestration: a leading "WSO"
/// becomes "AB" (WSOA -> ABA); otherwise "AB_" is prepended.
std::string ab_name(const std::string& wso);

AbDef derive_ab(const WsoDef& wso, const Model& model, const Config& config);

/// Throws Error when the mapping is not injective.
Verdict correspondence_check(const AbDef& ab, const WsDef& ws,
                             const std::map<std::string, std::string>& mapping,
                             const Model& model, const Config& config);

TermPtr assemble_system(const CompositionModel& comp, const Model& model);

Verdict verify_system(const CompositionModel& comp, const std::string& spec,
                      Relation relation, const Model& model, const Config& config);

Verdict wsc_conformance(const CompositionModel& comp, const Model& model,
                        const Config& config);

/// Shared by the check runner: applies `relation` to two LTSs.
Verdict compare(const StepLTS& left, const StepLTS& right, Relation relation);

}  // namespace aptc

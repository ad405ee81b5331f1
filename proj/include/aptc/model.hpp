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
#include <string_view>
#include <utility>
#include <vector>

#include "aptc/config.hpp"
#include "aptc/term.hpp"

namespace aptc {

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// A reference that did not resolve after parsing.
class ResolveError : public Error {
 public:
  ResolveError(std::string identifier, const std::string& message);
  const std::string& identifier() const { return identifier_; }

 private:
  std::string identifier_;
};

enum class Relation { StrongStep, Branching, RootedBranching, WeakTraceInclusion };

std::string_view to_string(Relation r);   // "strong-step-bisim", ...
std::string_view relation_token(Relation r);  // "~s", "~bb", "~rbb", "<=wt"

/// Left or right side of a check: a system, process or spec by name, or
/// `ab(W)`, the abstract behaviour derived from orchestration W.
struct Operand {
  bool abstract_of = false;
  std::string name;

  std::string str() const;
  bool operator==(const Operand&) const = default;
};

struct CheckGoal {
  Operand left;
  Operand right;
  Relation relation = Relation::Branching;
  ConfigOverrides overrides;

  std::string label() const;
  bool operator==(const CheckGoal&) const = default;
};

struct NamedSet {
  std::string name;
  NameSet names;
  bool operator==(const NamedSet&) const = default;
};

struct NamedSystem {
  std::string name;
  TermPtr term;
  bool operator==(const NamedSystem& o) const {
    return name == o.name && equal(term, o.term);
  }
};

/// A composition participant: an orchestration (with its internal
/// activities and optionally a claimed abstract behaviour) or an interface
/// service (with the orchestration it serves and the operation mapping).
struct Participant {
  enum class Role { Wso, Ws };
  Role role = Role::Wso;
  std::string process;
  // Wso
  NameSet internal;
  TermPtr claimed;  // read as the loop X = claimed . X; may be null
  // Ws
  std::string serves;
  std::vector<std::pair<std::string, std::string>> mapping;

  bool operator==(const Participant& o) const {
    return role == o.role && process == o.process && internal == o.internal &&
           equal(claimed, o.claimed) && serves == o.serves &&
           mapping == o.mapping;
  }
};

struct ContractPair {
  std::string symbol;
  std::string left;
  std::string right;
  bool operator==(const ContractPair&) const = default;
};

struct Contract {
  std::string name;
  std::string protocol;  // a spec name
  std::vector<ContractPair> pairs;
  bool operator==(const Contract&) const = default;
};

struct CompositionDecl {
  std::string name;
  std::string hide_set;
  std::string block_set;  // empty: default to dom(gamma)
  std::string contract;   // may be empty
  bool operator==(const CompositionDecl&) const = default;
};

/// Everything one `.aptc` file declares.  Terms are kept as written (sums
/// not yet elaborated) so that rendering round-trips.
struct Model {
  std::vector<DataDomain> domains;
  std::vector<RecursiveSpec> processes;
  std::vector<RecursiveSpec> specs;
  CommTable comms;
  ConflictRelation conflicts;
  std::vector<NamedSet> action_sets;
  std::vector<Participant> participants;
  std::vector<Contract> contracts;
  std::vector<NamedSystem> systems;
  std::vector<CompositionDecl> compositions;
  std::vector<CheckGoal> checks;

  const RecursiveSpec* find_process(std::string_view name) const;
  const RecursiveSpec* find_spec(std::string_view name) const;
  /// A process or a spec.
  const RecursiveSpec* find_behaviour(std::string_view name) const;
  const NamedSystem* find_system(std::string_view name) const;
  const NamedSet* find_set(std::string_view name) const;
  const Participant* find_participant(std::string_view process) const;
  const Contract* find_contract(std::string_view name) const;
  const CompositionDecl* find_composition(std::string_view name) const;

  bool operator==(const Model&) const = default;
};

/// Parses and resolves a model.  Throws ParseError or ResolveError.
Model parse_model(std::string_view text);
Model load_model_file(const std::string& path);

/// Deterministic text form; parse_model(render_model(m)) == m.
std::string render_model(const Model& model);

/// Renders a term in DSL syntax.  `system_context` prints variable
/// references by their owning process name.
std::string render_term(const TermPtr& t, bool system_context = false);

/// Whole-model validation: every violation from every process and spec,
/// plus domain and communication table checks.
std::vector<Violation> validate_model(const Model& model);

}  // namespace aptc

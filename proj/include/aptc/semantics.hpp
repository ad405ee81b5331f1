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
#include <memory>
#include <string>
#include <vector>

#include "aptc/config.hpp"
#include "aptc/lts.hpp"
#include "aptc/model.hpp"
#include "aptc/term.hpp"

namespace aptc {

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t max_states, std::size_t frontier);
  std::size_t max_states() const { return max_states_; }
  std::size_t frontier() const { return frontier_; }

 private:
  std::size_t max_states_;
  std::size_t frontier_;
};

class UnguardedRecursion : public Error {
 public:
  explicit UnguardedRecursion(const std::string& variable);
};

/// Position of a running system: one canonical term per top-level parallel
/// component, plus per-component round counters (barrier mode only; kept
/// normalised so the smallest is 0).
struct SystemState {
  std::vector<TermPtr> components;
  std::vector<unsigned> rounds;

  std::string key() const;
};

/// Canonicalising constructors used for successor terms: terminated heads
/// are dropped, sequences are right-associated, alternatives flattened,
/// sorted and deduplicated, directly nested hidings merged.
TermPtr canonical(const TermPtr& t);

/// Removes steps per the conflict relation: when two steps contain a and b
/// with a # b, every step containing the lexicographically larger of the
/// two is dropped.  Label names are compared by base action name; a
/// communication label contributes its participants.
std::vector<Step> apply_theta(const std::vector<Step>& steps,
                              const ConflictRelation& conflicts);

/// Operational semantics of one model under one configuration.  A system
/// term of the form hide/block/theta(P1 <> ... <> Pn) is split into its
/// operator prefix and its parallel components; everything else is a
/// single component.
class Semantics {
 public:
  Semantics(const Model& model, Config config);
  ~Semantics();
  Semantics(const Semantics&) = delete;
  Semantics& operator=(const Semantics&) = delete;

  struct Successor {
    Step step;
    SystemState next;
  };

  /// Prepares `system` (a term over process names) for exploration.
  SystemState initial_state(const TermPtr& system);
  /// Every step enabled in `state`, sorted by step then successor key.
  std::vector<Successor> enabled_steps(const SystemState& state);
  /// Breadth-first closure from the initial state.
  StepLTS generate(const TermPtr& system);

  const Config& config() const { return config_; }
  /// Names of actions that are some shadow's base within the current system.
  const NameSet& shadow_bases() const;

 private:
  struct Impl;
  Config config_;
  std::unique_ptr<Impl> impl_;
};

StepLTS generate_lts(const TermPtr& system, const Model& model,
                     const Config& config);

/// Looks up a system or process/spec by name and returns its term.
TermPtr system_term(const Model& model, const std::string& name);

}  // namespace aptc

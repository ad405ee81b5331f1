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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace aptc {

/// A multiset of simultaneously executed labels, kept sorted.  The empty
/// step is the silent step tau.
using Step = std::vector<std::string>;

std::string step_str(const Step& s);  // "{A1(d1), B1}" or "tau"
inline bool is_tau(const Step& s) { return s.empty(); }

struct Transition {
  std::size_t from;
  std::size_t label;  // index into StepLTS::labels
  std::size_t to;

  bool operator==(const Transition&) const = default;
  auto operator<=>(const Transition&) const = default;
};

/// Finite transition system whose labels are steps.  `labels[0]` is always
/// tau.  Transitions are kept sorted and duplicate-free.
class StepLTS {
 public:
  StepLTS();

  std::size_t add_state(std::string key = {});
  std::size_t intern(const Step& step);
  void add_transition(std::size_t from, const Step& step, std::size_t to);
  void add_transition_id(std::size_t from, std::size_t label, std::size_t to);
  /// Sorts and deduplicates the transition list.
  void seal();

  std::size_t num_states() const { return keys_.size(); }
  std::size_t initial() const { return initial_; }
  void set_initial(std::size_t s) { initial_ = s; }
  const std::vector<Step>& labels() const { return labels_; }
  const Step& label(std::size_t id) const { return labels_[id]; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::string& state_key(std::size_t s) const { return keys_[s]; }

  /// Outgoing transitions of `s`, valid after seal().
  std::vector<Transition> out(std::size_t s) const;
  bool is_deadlock(std::size_t s) const;

  /// Set by prune_dead when the initial state itself was dead.
  bool initial_dead = false;

 private:
  std::vector<std::string> keys_;
  std::size_t initial_ = 0;
  std::vector<Step> labels_;
  std::map<Step, std::size_t> label_ids_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> first_;  // CSR offsets into transitions_
};

/// Least-fixpoint removal of states from which no infinite or live run
/// exists: a state with no transitions is dead, and so is one whose every
/// transition leads to a dead state.
StepLTS prune_dead(const StepLTS& lts);

std::vector<std::size_t> deadlocks(const StepLTS& lts);
/// States lying on a cycle of tau transitions.
std::vector<std::size_t> divergences(const StepLTS& lts);

/// Relabel through `rename`: each label text maps to a new text (labels not
/// present are kept); tau stays tau.
StepLTS rename_labels(const StepLTS& lts,
                      const std::map<std::string, std::string>& rename);

/// `{"initial":..,"states":[..],"transitions":[..]}` with "label":["tau"]
/// for silent steps.
std::string to_json(const StepLTS& lts);
std::string to_dot(const StepLTS& lts, const std::string& name = "lts");

}  // namespace aptc

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

#include "aptc/config.hpp"

namespace aptc {

Config ConfigOverrides::apply(Config base) const {
  if (comm_policy) base.comm_policy = *comm_policy;
  if (step_mode) base.step_mode = *step_mode;
  if (round_mode) base.round_mode = *round_mode;
  if (shadow_policy) base.shadow_policy = *shadow_policy;
  if (max_states) base.max_states = *max_states;
  return base;
}

ConfigOverrides ConfigOverrides::merged(const ConfigOverrides& over) const {
  ConfigOverrides out = *this;
  if (over.comm_policy) out.comm_policy = over.comm_policy;
  if (over.step_mode) out.step_mode = over.step_mode;
  if (over.round_mode) out.round_mode = over.round_mode;
  if (over.shadow_policy) out.shadow_policy = over.shadow_policy;
  if (over.max_states) out.max_states = over.max_states;
  if (over.prune_dead) out.prune_dead = over.prune_dead;
  return out;
}

bool ConfigOverrides::empty() const {
  return !comm_policy && !step_mode && !round_mode && !shadow_policy &&
         !max_states && !prune_dead;
}

std::string_view to_string(CommPolicy p) {
  return p == CommPolicy::Binary ? "binary" : "chained";
}
std::string_view to_string(StepMode m) {
  return m == StepMode::Interleave ? "interleave" : "step";
}
std::string_view to_string(RoundMode m) {
  return m == RoundMode::Overlap ? "overlap" : "barrier";
}
std::string_view to_string(ShadowPolicy p) {
  return p == ShadowPolicy::Strict ? "strict" : "loose";
}

std::optional<CommPolicy> parse_comm_policy(std::string_view s) {
  if (s == "binary") return CommPolicy::Binary;
  if (s == "chained") return CommPolicy::Chained;
  return std::nullopt;
}
std::optional<StepMode> parse_step_mode(std::string_view s) {
  if (s == "interleave") return StepMode::Interleave;
  if (s == "step") return StepMode::Step;
  return std::nullopt;
}
std::optional<RoundMode> parse_round_mode(std::string_view s) {
  if (s == "overlap") return RoundMode::Overlap;
  if (s == "barrier") return RoundMode::Barrier;
  return std::nullopt;
}
std::optional<ShadowPolicy> parse_shadow_policy(std::string_view s) {
  if (s == "strict") return ShadowPolicy::Strict;
  if (s == "loose") return ShadowPolicy::Loose;
  return std::nullopt;
}

}  // namespace aptc

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
#include <optional>
#include <string>
#include <string_view>

namespace aptc {

enum class CommPolicy { Binary, Chained };
enum class StepMode { Interleave, Step };
enum class RoundMode { Overlap, Barrier };
enum class ShadowPolicy { Strict, Loose };

/// Semantic policies for state-space generation.
struct Config {
  CommPolicy comm_policy = CommPolicy::Chained;
  StepMode step_mode = StepMode::Step;
  RoundMode round_mode = RoundMode::Barrier;
  ShadowPolicy shadow_policy = ShadowPolicy::Strict;
  std::size_t max_states = 100000;

  bool operator==(const Config&) const = default;
};

/// Per-goal adjustments layered over a base Config.
struct ConfigOverrides {
  std::optional<CommPolicy> comm_policy;
  std::optional<StepMode> step_mode;
  std::optional<RoundMode> round_mode;
  std::optional<ShadowPolicy> shadow_policy;
  std::optional<std::size_t> max_states;
  std::optional<bool> prune_dead;

  Config apply(Config base) const;
  /// Later values win.
  ConfigOverrides merged(const ConfigOverrides& over) const;
  bool empty() const;
  bool operator==(const ConfigOverrides&) const = default;
};

std::string_view to_string(CommPolicy p);
std::string_view to_string(StepMode m);
std::string_view to_string(RoundMode m);
std::string_view to_string(ShadowPolicy p);

// Parse the spellings used by the DSL and the command line; nullopt when
// the word is not recognised.
std::optional<CommPolicy> parse_comm_policy(std::string_view s);
std::optional<StepMode> parse_step_mode(std::string_view s);
std::optional<RoundMode> parse_round_mode(std::string_view s);
std::optional<ShadowPolicy> parse_shadow_policy(std::string_view s);

}  // namespace aptc

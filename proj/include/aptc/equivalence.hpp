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
#include <vector>

#include "aptc/lts.hpp"
#include "aptc/term.hpp"

namespace aptc {

enum class Side { Left, Right };

/// A distinguishing run: both systems can perform `trace` (weakly, for the
/// tau-abstracting relations) and end in `left_state` / `right_state`, from
/// where the `side` system can perform `distinguishing` and the other cannot
/// follow.
struct Counterexample {
  std::vector<Step> trace;
  std::size_t left_state = 0;
  std::size_t right_state = 0;
  Step distinguishing;
  Side side = Side::Left;
  std::string reason;
};

/// Identifies the partition class shared by the two initial states.
struct Witness {
  std::size_t blocks = 0;
  std::size_t block = 0;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
  std::optional<Counterexample> counterexample;
};

Verdict strong_step_bisim(const StepLTS& a, const StepLTS& b);
Verdict branching_bisim(const StepLTS& a, const StepLTS& b, bool rooted);

enum class Reduction { Strong, Branching };

/// Quotient by the chosen bisimulation.  States are numbered breadth-first
/// from the initial class; for branching, inert tau transitions go away.
StepLTS minimize(const StepLTS& lts, Reduction relation);

/// Every visible step sequence of `a` is one of `b`.
Verdict weak_trace_inclusion(const StepLTS& a, const StepLTS& b);

/// Tracks a counter over every path: each label matching `up` adds one,
/// each matching `down` subtracts one.  A pattern matches a label when it
/// equals the label text or its base action name.  Holds iff the counter
/// stays within [low, high].
Verdict counter_monitor(const StepLTS& lts, const NameSet& up, const NameSet& down,
                        long low, long high);

/// Whether `target` is reachable from the initial state by `trace`; with
/// `weak`, tau steps may be inserted or skipped freely.
bool replay(const StepLTS& lts, const std::vector<Step>& trace, std::size_t target,
            bool weak);

}  // namespace aptc

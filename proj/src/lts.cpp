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

#include "aptc/lts.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace aptc {

std::string step_str(const Step& s) {
  if (s.empty()) return "tau";
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i];
  }
  return out + "}";
}

StepLTS::StepLTS() { intern(Step{}); }

std::size_t StepLTS::add_state(std::string key) {
  keys_.push_back(std::move(key));
  return keys_.size() - 1;
}

std::size_t StepLTS::intern(const Step& step) {
  auto [it, fresh] = label_ids_.emplace(step, labels_.size());
  if (fresh) labels_.push_back(step);
  return it->second;
}

void StepLTS::add_transition(std::size_t from, const Step& step, std::size_t to) {
  add_transition_id(from, intern(step), to);
}

void StepLTS::add_transition_id(std::size_t from, std::size_t label,
                                std::size_t to) {
  transitions_.push_back({from, label, to});
  first_.clear();
}

void StepLTS::seal() {
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());
  first_.assign(keys_.size() + 1, 0);
  for (const auto& t : transitions_) ++first_[t.from + 1];
  for (std::size_t i = 0; i < keys_.size(); ++i) first_[i + 1] += first_[i];
}

std::vector<Transition> StepLTS::out(std::size_t s) const {
  if (first_.size() != keys_.size() + 1)
    throw std::logic_error("StepLTS::out called before seal()");
  return {transitions_.begin() + static_cast<std::ptrdiff_t>(first_[s]),
          transitions_.begin() + static_cast<std::ptrdiff_t>(first_[s + 1])};
}

bool StepLTS::is_deadlock(std::size_t s) const { return out(s).empty(); }

StepLTS prune_dead(const StepLTS& lts) {
  const std::size_t n = lts.num_states();
  std::vector<std::size_t> live_out(n, 0);
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& t : lts.transitions()) {
    ++live_out[t.from];
    preds[t.to].push_back(t.from);
  }
  std::vector<bool> dead(n, false);
  std::deque<std::size_t> work;
  for (std::size_t s = 0; s < n; ++s)
    if (live_out[s] == 0) {
      dead[s] = true;
      work.push_back(s);
    }
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    for (std::size_t p : preds[s])
      if (!dead[p] && --live_out[p] == 0) {
        dead[p] = true;
        work.push_back(p);
      }
  }

  StepLTS out;
  if (dead[lts.initial()]) {
    out.set_initial(out.add_state(lts.state_key(lts.initial())));
    out.initial_dead = true;
    out.seal();
    return out;
  }
  // Renumber in breadth-first order from the initial state.
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::deque<std::size_t> bfs{lts.initial()};
  map[lts.initial()] = out.add_state(lts.state_key(lts.initial()));
  out.set_initial(0);
  while (!bfs.empty()) {
    std::size_t s = bfs.front();
    bfs.pop_front();
    for (const auto& t : lts.out(s)) {
      if (dead[t.to]) continue;
      if (map[t.to] == SIZE_MAX) {
        map[t.to] = out.add_state(lts.state_key(t.to));
        bfs.push_back(t.to);
      }
      out.add_transition(map[s], lts.label(t.label), map[t.to]);
    }
  }
  out.seal();
  return out;
}

std::vector<std::size_t> deadlocks(const StepLTS& lts) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < lts.num_states(); ++s)
    if (lts.is_deadlock(s)) out.push_back(s);
  return out;
}

std::vector<std::size_t> divergences(const StepLTS& lts) {
  // Tarjan's SCC over the tau-subgraph, iteratively.
  const std::size_t n = lts.num_states();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<bool> self_loop(n, false);
  for (const auto& t : lts.transitions())
    if (t.label == 0) {
      succ[t.from].push_back(t.to);
      if (t.from == t.to) self_loop[t.from] = true;
    }
  std::vector<long> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack, out;
  long counter = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < succ[v].size()) {
        std::size_t w = succ[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        if (comp.size() > 1 || self_loop[v])
          out.insert(out.end(), comp.begin(), comp.end());
      }
      std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StepLTS rename_labels(const StepLTS& lts,
                      const std::map<std::string, std::string>& rename) {
  StepLTS out;
  for (std::size_t s = 0; s < lts.num_states(); ++s) out.add_state(lts.state_key(s));
  out.set_initial(lts.initial());
  for (const auto& t : lts.transitions()) {
    Step step = lts.label(t.label);
    for (auto& l : step)
      if (auto it = rename.find(l); it != rename.end()) l = it->second;
    std::sort(step.begin(), step.end());
    out.add_transition(t.from, step, t.to);
  }
  out.seal();
  return out;
}

std::string to_json(const StepLTS& lts) {
  nlohmann::ordered_json j;
  j["initial"] = lts.initial();
  auto states = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < lts.num_states(); ++s)
    states.push_back({{"id", s}, {"deadlock", lts.is_deadlock(s)}});
  j["states"] = std::move(states);
  auto trans = nlohmann::ordered_json::array();
  for (const auto& t : lts.transitions()) {
    const Step& st = lts.label(t.label);
    nlohmann::ordered_json label =
        st.empty() ? nlohmann::ordered_json::array({"tau"})
                   : nlohmann::ordered_json(st);
    trans.push_back({{"from", t.from}, {"label", std::move(label)}, {"to", t.to}});
  }
  j["transitions"] = std::move(trans);
  return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const StepLTS& lts, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t s = 0; s < lts.num_states(); ++s) {
    os << "  s" << s << " [label=\"" << s << "\"";
    if (s == lts.initial()) os << ", shape=doublecircle";
    if (lts.is_deadlock(s)) os << ", style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (const auto& t : lts.transitions())
    os << "  s" << t.from << " -> s" << t.to << " [label=\""
       << dot_escape(step_str(lts.label(t.label))) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace aptc

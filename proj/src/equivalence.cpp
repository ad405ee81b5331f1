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

#include "aptc/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace aptc {

namespace {

constexpr std::size_t kTauLabel = 0;

// One or two LTSs laid side by side with a shared label table.
struct Graph {
  std::size_t n = 0;
  std::size_t offset = 0;  // first state of the right-hand LTS
  std::vector<Step> labels;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> succ;  // (label, to)

  std::size_t add_label(const Step& s, std::map<Step, std::size_t>& ids) {
    auto [it, fresh] = ids.emplace(s, labels.size());
    if (fresh) labels.push_back(s);
    return it->second;
  }

  static Graph of(const StepLTS& a, const StepLTS* b = nullptr) {
    Graph g;
    std::map<Step, std::size_t> ids;
    g.add_label(Step{}, ids);
    g.offset = a.num_states();
    g.n = a.num_states() + (b ? b->num_states() : 0);
    g.succ.resize(g.n);
    auto load = [&](const StepLTS& l, std::size_t base) {
      for (const auto& t : l.transitions())
        g.succ[base + t.from].emplace_back(g.add_label(l.label(t.label), ids), base + t.to);
    };
    load(a, 0);
    if (b) load(*b, g.offset);
    for (auto& s : g.succ) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return g;
  }
};

using Partition = std::vector<std::size_t>;
using Signature = std::vector<std::pair<std::size_t, std::size_t>>;  // (label, block)

// States reachable from s by tau steps that stay inside s's block.
std::vector<std::size_t> inert_closure(const Graph& g, const Partition& p, std::size_t s) {
  std::vector<std::size_t> out{s};
  std::set<std::size_t> seen{s};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& [l, t] : g.succ[out[i]])
      if (l == kTauLabel && p[t] == p[s] && seen.insert(t).second) out.push_back(t);
  return out;
}

Signature signature(const Graph& g, const Partition& p, std::size_t s, bool branching) {
  Signature sig;
  if (!branching) {
    for (const auto& [l, t] : g.succ[s]) sig.emplace_back(l, p[t]);
  } else {
    for (auto u : inert_closure(g, p, s))
      for (const auto& [l, t] : g.succ[u])
        if (!(l == kTauLabel && p[t] == p[s])) sig.emplace_back(l, p[t]);
  }
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

// Signature refinement to the coarsest stable partition.  Returns every
// intermediate partition; history.back() is the fixpoint.
std::vector<Partition> refine(const Graph& g, bool branching) {
  std::vector<Partition> history{Partition(g.n, 0)};
  std::size_t blocks = g.n ? 1 : 0;
  while (true) {
    const Partition& cur = history.back();
    std::map<std::pair<std::size_t, Signature>, std::size_t> ids;
    Partition next(g.n);
    for (std::size_t s = 0; s < g.n; ++s) {
      auto k = std::make_pair(cur[s], signature(g, cur, s, branching));
      auto [it, fresh] = ids.emplace(std::move(k), ids.size());
      next[s] = it->second;
    }
    if (ids.size() == blocks) break;
    blocks = ids.size();
    history.push_back(std::move(next));
  }
  return history;
}

bool visible(std::size_t label) { return label != kTauLabel; }

// Walks the refinement history from a separated pair down to a move one
// side cannot follow.
Counterexample extract(const Graph& g, const std::vector<Partition>& history,
                       std::size_t left, std::size_t right, bool branching) {
  Counterexample cx;
  std::size_t p = left, q = right;
  while (true) {
    std::size_t k = 1;
    while (k < history.size() && history[k][p] == history[k][q]) ++k;
    // Separated in round k, so equal in round k-1 with differing signatures.
    const Partition& part = history[k - 1];
    auto sp = signature(g, part, p, branching);
    auto sq = signature(g, part, q, branching);
    std::vector<std::pair<std::size_t, std::size_t>> only_p, only_q;
    std::set_difference(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(only_p));
    std::set_difference(sq.begin(), sq.end(), sp.begin(), sp.end(), std::back_inserter(only_q));
    // Prefer a visible move; among equals, the left system's.
    auto pick = [&](const auto& v) -> std::optional<std::pair<std::size_t, std::size_t>> {
      for (const auto& e : v)
        if (visible(e.first)) return e;
      if (!v.empty()) return v.front();
      return std::nullopt;
    };
    auto ep = pick(only_p), eq = pick(only_q);
    bool mover_left;
    std::pair<std::size_t, std::size_t> e;
    if (ep && (visible(ep->first) || !eq || !visible(eq->first))) {
      mover_left = true;
      e = *ep;
    } else {
      mover_left = false;
      e = *eq;
    }
    const std::size_t mover = mover_left ? p : q;
    const std::size_t other = mover_left ? q : p;
    const auto [label, target_block] = e;

    // Realise the move on the mover's side.
    std::size_t dest = mover;
    std::vector<std::size_t> from = branching ? inert_closure(g, part, mover)
                                              : std::vector<std::size_t>{mover};
    bool found = false;
    for (auto u : from) {
      for (const auto& [l, t] : g.succ[u])
        if (l == label && part[t] == target_block &&
            !(branching && l == kTauLabel && part[t] == part[mover])) {
          dest = t;
          found = true;
          break;
        }
      if (found) break;
    }

    // The other side's best answer.
    std::optional<std::size_t> answer;
    if (branching && label == kTauLabel) {
      answer = other;
    } else {
      std::vector<std::size_t> ofrom = branching ? inert_closure(g, part, other)
                                                 : std::vector<std::size_t>{other};
      for (auto u : ofrom) {
        for (const auto& [l, t] : g.succ[u])
          if (l == label) {
            answer = t;
            break;
          }
        if (answer) break;
      }
    }
    if (!answer) {
      cx.left_state = p;
      cx.right_state = q;
      cx.distinguishing = g.labels[label];
      cx.side = mover_left ? Side::Left : Side::Right;
      cx.reason = std::string(mover_left ? "left" : "right") + " can do " +
                  step_str(g.labels[label]) + ", the other cannot follow";
      break;
    }
    cx.trace.push_back(g.labels[label]);
    p = mover_left ? dest : *answer;
    q = mover_left ? *answer : dest;
  }
  cx.right_state -= g.offset;
  return cx;
}

Verdict bisim(const StepLTS& a, const StepLTS& b, bool branching) {
  Graph g = Graph::of(a, &b);
  auto history = refine(g, branching);
  const Partition& fin = history.back();
  const std::size_t ia = a.initial(), ib = g.offset + b.initial();
  Verdict v;
  if (fin[ia] == fin[ib]) {
    v.holds = true;
    std::set<std::size_t> distinct(fin.begin(), fin.end());
    v.witness = Witness{distinct.size(), fin[ia]};
  } else {
    v.counterexample = extract(g, history, ia, ib, branching);
  }
  return v;
}

}  // namespace

Verdict strong_step_bisim(const StepLTS& a, const StepLTS& b) { return bisim(a, b, false); }

Verdict branching_bisim(const StepLTS& a, const StepLTS& b, bool rooted) {
  Verdict v = bisim(a, b, true);
  if (!rooted || !v.holds) return v;
  // Root condition: initial moves must be matched directly, tau by tau.
  Graph g = Graph::of(a, &b);
  const Partition fin = refine(g, true).back();
  const std::size_t ia = a.initial(), ib = g.offset + b.initial();
  auto unmatched = [&](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    for (const auto& [l, t] : g.succ[x]) {
      bool ok = false;
      for (const auto& [l2, t2] : g.succ[y])
        if (l2 == l && fin[t2] == fin[t]) {
          ok = true;
          break;
        }
      if (!ok) return l;
    }
    return std::nullopt;
  };
  for (int side = 0; side < 2; ++side) {
    auto bad = side == 0 ? unmatched(ia, ib) : unmatched(ib, ia);
    if (!bad) continue;
    Verdict r;
    Counterexample cx;
    cx.left_state = a.initial();
    cx.right_state = b.initial();
    cx.distinguishing = g.labels[*bad];
    cx.side = side == 0 ? Side::Left : Side::Right;
    cx.reason = "root condition: initial " + step_str(cx.distinguishing) +
                " has no direct match";
    r.counterexample = std::move(cx);
    return r;
  }
  return v;
}

StepLTS minimize(const StepLTS& lts, Reduction relation) {
  const bool branching = relation == Reduction::Branching;
  Graph g = Graph::of(lts);
  const Partition fin = refine(g, branching).back();
  StepLTS out;
  if (lts.num_states() == 0) {
    out.seal();
    return out;
  }
  std::map<std::size_t, std::size_t> block_id;
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t s = 0; s < g.n; ++s) members[fin[s]].push_back(s);
  std::deque<std::size_t> bfs{fin[lts.initial()]};
  block_id[fin[lts.initial()]] = out.add_state("block:" + std::to_string(fin[lts.initial()]));
  out.set_initial(0);
  while (!bfs.empty()) {
    std::size_t blk = bfs.front();
    bfs.pop_front();
    // Ordered by step text so numbering does not depend on label interning.
    std::set<std::pair<Step, std::size_t>> edges;  // (step, target block)
    for (auto s : members[blk])
      for (const auto& [l, t] : g.succ[s]) {
        if (branching && l == kTauLabel && fin[t] == blk) continue;
        edges.emplace(g.labels[l], fin[t]);
      }
    for (const auto& [step, tb] : edges) {
      if (!block_id.count(tb)) {
        block_id[tb] = out.add_state("block:" + std::to_string(tb));
        bfs.push_back(tb);
      }
      out.add_transition(block_id[blk], step, block_id[tb]);
    }
  }
  out.seal();
  return out;
}

namespace {

using Subset = std::vector<std::size_t>;

Subset tau_closure(const Graph& g, Subset s) {
  std::set<std::size_t> seen(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (const auto& [l, t] : g.succ[s[i]])
      if (l == kTauLabel && seen.insert(t).second) s.push_back(t);
  return {seen.begin(), seen.end()};
}

Subset post(const Graph& g, const Subset& s, std::size_t label) {
  std::set<std::size_t> out;
  for (auto x : s)
    for (const auto& [l, t] : g.succ[x])
      if (l == label) out.insert(t);
  return {out.begin(), out.end()};
}

}  // namespace

Verdict weak_trace_inclusion(const StepLTS& a, const StepLTS& b) {
  Graph g = Graph::of(a, &b);
  using Pair = std::pair<Subset, Subset>;
  std::map<Pair, std::pair<std::optional<Pair>, std::size_t>> parent;  // via label
  Pair start{tau_closure(g, {a.initial()}), tau_closure(g, {g.offset + b.initial()})};
  parent.emplace(start, std::make_pair(std::nullopt, 0));
  std::deque<Pair> queue{start};
  while (!queue.empty()) {
    Pair cur = queue.front();
    queue.pop_front();
    std::set<std::size_t> labels;
    for (auto x : cur.first)
      for (const auto& [l, t] : g.succ[x])
        if (visible(l)) labels.insert(l);
    for (auto l : labels) {
      Subset na = tau_closure(g, post(g, cur.first, l));
      Subset nb = tau_closure(g, post(g, cur.second, l));
      if (nb.empty()) {
        Counterexample cx;
        std::vector<Step> rev;
        Pair walk = cur;
        while (true) {
          auto& [prev, lbl] = parent.at(walk);
          if (!prev) break;
          rev.push_back(g.labels[lbl]);
          walk = *prev;
        }
        cx.trace.assign(rev.rbegin(), rev.rend());
        cx.left_state = cur.first.front();
        cx.right_state = cur.second.front() - g.offset;
        cx.distinguishing = g.labels[l];
        cx.side = Side::Left;
        cx.reason = "right cannot perform " + step_str(g.labels[l]) + " after the trace";
        Verdict v;
        v.counterexample = std::move(cx);
        return v;
      }
      Pair nxt{std::move(na), std::move(nb)};
      if (parent.emplace(nxt, std::make_pair(cur, l)).second) queue.push_back(std::move(nxt));
    }
  }
  Verdict v;
  v.holds = true;
  v.witness = Witness{parent.size(), 0};
  return v;
}

Verdict counter_monitor(const StepLTS& lts, const NameSet& up, const NameSet& down, long low,
                        long high) {
  auto matches = [](const NameSet& set, const std::string& label) {
    if (set.count(label)) return true;
    auto p = label.find('(');
    return p != std::string::npos && set.count(label.substr(0, p)) > 0;
  };
  using Node = std::pair<std::size_t, long>;
  std::map<Node, std::pair<std::optional<Node>, std::size_t>> parent;
  Node start{lts.initial(), 0};
  auto trace_to = [&](Node n) {
    std::vector<Step> rev;
    while (true) {
      auto& [prev, lbl] = parent.at(n);
      if (!prev) break;
      rev.push_back(lts.label(lbl));
      n = *prev;
    }
    return std::vector<Step>(rev.rbegin(), rev.rend());
  };
  Verdict v;
  if (low > 0 || high < 0) {
    Counterexample cx;
    cx.reason = "initial counter value 0 is outside the bounds";
    v.counterexample = std::move(cx);
    return v;
  }
  parent.emplace(start, std::make_pair(std::nullopt, 0));
  std::deque<Node> queue{start};
  while (!queue.empty()) {
    Node cur = queue.front();
    queue.pop_front();
    for (const auto& t : lts.out(cur.first)) {
      long c = cur.second;
      for (const auto& l : lts.label(t.label)) {
        if (matches(up, l)) ++c;
        if (matches(down, l)) --c;
      }
      if (c < low || c > high) {
        Counterexample cx;
        cx.trace = trace_to(cur);
        cx.left_state = cx.right_state = cur.first;
        cx.distinguishing = lts.label(t.label);
        cx.side = Side::Left;
        cx.reason = "counter reaches " + std::to_string(c) + ", outside [" +
                    std::to_string(low) + ", " + std::to_string(high) + "]";
        v.counterexample = std::move(cx);
        return v;
      }
      Node nxt{t.to, c};
      if (parent.emplace(nxt, std::make_pair(cur, t.label)).second) queue.push_back(nxt);
    }
  }
  v.holds = true;
  v.witness = Witness{parent.size(), 0};
  return v;
}

bool replay(const StepLTS& lts, const std::vector<Step>& trace, std::size_t target, bool weak) {
  Graph g = Graph::of(lts);
  std::map<Step, std::size_t> ids;
  for (std::size_t i = 0; i < g.labels.size(); ++i) ids.emplace(g.labels[i], i);
  Subset cur{lts.initial()};
  if (weak) cur = tau_closure(g, cur);
  for (const auto& step : trace) {
    if (weak && step.empty()) continue;
    auto it = ids.find(step);
    if (it == ids.end()) return false;
    cur = post(g, cur, it->second);
    if (weak) cur = tau_closure(g, cur);
    if (cur.empty()) return false;
  }
  return std::binary_search(cur.begin(), cur.end(), target);
}

}  // namespace aptc

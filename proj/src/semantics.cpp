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

#include "aptc/semantics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace aptc {

BudgetExceeded::BudgetExceeded(std::size_t max_states, std::size_t frontier)
    : Error("state budget exceeded: more than " + std::to_string(max_states) +
            " states (frontier " + std::to_string(frontier) + ")"),
      max_states_(max_states),
      frontier_(frontier) {}

UnguardedRecursion::UnguardedRecursion(const std::string& variable)
    : Error("unguarded recursion through '" + variable + "'") {}

std::string SystemState::key() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " | ";
    out += aptc::key(components[i]);
  }
  if (!rounds.empty()) {
    out += " #";
    for (unsigned r : rounds) out += std::to_string(r);
  }
  return out;
}

namespace {

// Smart constructors; children are assumed canonical already.

TermPtr mk_seq(const TermPtr& head, const TermPtr& tail) {
  if (head->kind == TermKind::Nil) return tail;
  if (tail->kind == TermKind::Nil) return head;
  if (head->kind == TermKind::Seq)
    return seq(head->children[0], mk_seq(head->children[1], tail));
  return seq(head, tail);
}

TermPtr mk_par(TermKind kind, const TermPtr& l, const TermPtr& r) {
  if (l->kind == TermKind::Nil) return r;
  if (r->kind == TermKind::Nil) return l;
  return kind == TermKind::Par ? par(l, r) : whole_par(l, r);
}

TermPtr mk_alt(const std::vector<TermPtr>& branches) {
  std::vector<std::pair<std::string, TermPtr>> flat;
  for (const auto& b : branches) {
    if (b->kind == TermKind::Alt)
      for (const auto& c : b->children) flat.emplace_back(key(c), c);
    else
      flat.emplace_back(key(b), b);
  }
  std::sort(flat.begin(), flat.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             flat.end());
  if (flat.size() == 1) return flat.front().second;
  std::vector<TermPtr> out;
  for (auto& [k, t] : flat) out.push_back(t);
  return alt(std::move(out));
}

TermPtr mk_wrap(const Term& w, const TermPtr& body) {
  if (body->kind == TermKind::Nil) return body;
  switch (w.kind) {
    case TermKind::Hide:
      if (body->kind == TermKind::Hide) {
        NameSet merged = w.names;
        merged.insert(body->names.begin(), body->names.end());
        return hide(std::move(merged), body->children[0]);
      }
      return hide(w.names, body, w.set_ref);
    case TermKind::Encaps:
      return encaps(w.names, body, w.set_ref, w.default_set);
    default: return conflict_elim(body);
  }
}

// Internal label form; `text` is what ends up in a Step.
struct Lbl {
  enum class K { Action, Shadow, Comm, Tau };
  K k = K::Action;
  std::string name;
  std::string text;
  std::vector<std::string> participants;
};

struct Item {
  Lbl label;
  bool fused = false;     // product of a communication or a shadow fusion
  bool resolved = false;  // already went through a fusion point
};

struct Move {
  std::vector<Item> items;
  TermPtr next;
  std::size_t tag = 0;
};

std::string base_name(const std::string& text) {
  auto p = text.find('(');
  return p == std::string::npos ? text : text.substr(0, p);
}

}  // namespace

TermPtr canonical(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Seq:
      return mk_seq(canonical(t->children[0]), canonical(t->children[1]));
    case TermKind::Alt: {
      std::vector<TermPtr> cs;
      for (const auto& c : t->children) cs.push_back(canonical(c));
      return mk_alt(cs);
    }
    case TermKind::Par:
    case TermKind::WholePar:
      return mk_par(t->kind, canonical(t->children[0]), canonical(t->children[1]));
    case TermKind::Hide:
    case TermKind::Encaps:
    case TermKind::ConflictElim: return mk_wrap(*t, canonical(t->children[0]));
    case TermKind::Sum: {
      Term copy = *t;
      copy.children = {canonical(t->children[0])};
      return std::make_shared<const Term>(std::move(copy));
    }
    default: return t;
  }
}

namespace {

// Indices of steps that survive the conflict relation, given each step's
// participating action names.
std::vector<bool> theta_keep(const std::vector<NameSet>& names,
                             const ConflictRelation& conflicts) {
  std::vector<bool> keep(names.size(), true);
  for (const auto& [x, y] : conflicts.pairs) {
    const std::string& lo = std::min(x, y);
    const std::string& hi = std::max(x, y);
    if (lo == hi) continue;
    std::vector<std::size_t> with_lo, with_hi;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].count(lo)) with_lo.push_back(i);
      if (names[i].count(hi)) with_hi.push_back(i);
    }
    bool clash = false;
    for (auto i : with_lo)
      for (auto j : with_hi)
        if (i != j) clash = true;
    if (clash)
      for (auto j : with_hi) keep[j] = false;
  }
  return keep;
}

NameSet text_names(const std::string& text) {
  if (text.rfind("c(", 0) == 0 && text.back() == ')') {
    NameSet out;
    std::string inner = text.substr(2, text.size() - 3);
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      if (comma == std::string::npos) comma = inner.size();
      out.insert(inner.substr(start, comma - start));
      start = comma + 1;
    }
    return out;
  }
  return {base_name(text)};
}

}  // namespace

std::vector<Step> apply_theta(const std::vector<Step>& steps,
                              const ConflictRelation& conflicts) {
  std::vector<NameSet> names;
  for (const auto& s : steps) {
    NameSet n;
    for (const auto& l : s) {
      auto m = text_names(l);
      n.insert(m.begin(), m.end());
    }
    names.push_back(std::move(n));
  }
  auto keep = theta_keep(names, conflicts);
  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (keep[i]) out.push_back(steps[i]);
  return out;
}

struct Semantics::Impl {
  const Model& model;
  const Config& config;
  std::unordered_map<std::string, TermPtr> equations;  // "scope::var"
  NameSet shadow_bases;
  std::unordered_map<std::string, std::vector<Move>> cache;
  std::vector<std::string> unfolding;

  // Static operator prefix of the current system, outermost first.
  std::vector<TermPtr> wrappers;
  TermKind join = TermKind::WholePar;
  std::vector<std::string> entry_keys;

  Impl(const Model& m, const Config& c) : model(m), config(c) {
    for (const auto* list : {&m.processes, &m.specs})
      for (const auto& p : *list)
        for (const auto& [lhs, rhs] : elaborate_sums(p, m.domains).equations)
          equations.emplace(p.name + "::" + lhs, rhs);
  }

  static Lbl action_label(const ActionLabel& a) {
    return Lbl{Lbl::K::Action, a.name, a.str(), {}};
  }

  const std::vector<Move>& moves(const TermPtr& t) {
    std::string k = key(t);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    std::vector<Move> out = compute_moves(t);
    return cache.emplace(std::move(k), std::move(out)).first->second;
  }

  std::vector<Move> compute_moves(const TermPtr& t) {
    std::vector<Move> out;
    switch (t->kind) {
      case TermKind::Nil:
      case TermKind::Deadlock: break;
      case TermKind::Act:
        out.push_back({{Item{action_label(t->action)}}, nil()});
        break;
      case TermKind::Shadow:
        out.push_back(
            {{Item{Lbl{Lbl::K::Shadow, t->action.name, "@" + t->action.name, {}}}},
             nil()});
        break;
      case TermKind::Var: {
        std::string vk = t->scope + "::" + t->name;
        auto it = equations.find(vk);
        if (it == equations.end()) throw Error("unbound variable '" + t->name + "'");
        if (std::find(unfolding.begin(), unfolding.end(), vk) != unfolding.end())
          throw UnguardedRecursion(t->name);
        unfolding.push_back(vk);
        try {
          out = moves(canonical(it->second));
        } catch (...) {
          unfolding.pop_back();
          throw;
        }
        unfolding.pop_back();
        break;
      }
      case TermKind::Seq:
        for (const auto& m : moves(t->children[0]))
          out.push_back({m.items, mk_seq(m.next, t->children[1])});
        break;
      case TermKind::Alt:
        for (const auto& c : t->children) {
          const auto& ms = moves(c);
          out.insert(out.end(), ms.begin(), ms.end());
        }
        break;
      case TermKind::Par:
      case TermKind::WholePar: {
        const auto& l = t->children[0];
        const auto& r = t->children[1];
        const auto left = moves(l);
        const auto& right = moves(r);
        for (const auto& m : left) out.push_back({m.items, mk_par(t->kind, m.next, r)});
        for (const auto& m : right) out.push_back({m.items, mk_par(t->kind, l, m.next)});
        for (const auto& a : left)
          for (const auto& b : right) {
            Move c{a.items, mk_par(t->kind, a.next, b.next)};
            c.items.insert(c.items.end(), b.items.begin(), b.items.end());
            out.push_back(std::move(c));
          }
        break;
      }
      case TermKind::Sum: throw Error("sum reached the semantics unelaborated");
      case TermKind::Hide:
      case TermKind::Encaps:
      case TermKind::ConflictElim: {
        std::vector<Move> fused;
        for (const auto& m : moves(t->children[0]))
          for (auto& items : fuse(m.items)) fused.push_back({std::move(items), m.next});
        apply_operator(*t, fused);
        for (auto& m : fused) out.push_back({std::move(m.items), mk_wrap(*t, m.next)});
        break;
      }
    }
    return out;
  }

  // Resolves the raw (not yet fused) items of one candidate step into every
  // admissible combination of events.
  std::vector<std::vector<Item>> fuse(const std::vector<Item>& items) const {
    std::vector<Item> done;
    std::vector<std::size_t> actions, shadows;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].resolved)
        done.push_back(items[i]);
      else if (items[i].label.k == Lbl::K::Shadow)
        shadows.push_back(i);
      else
        actions.push_back(i);
    }

    std::vector<std::vector<Item>> out;
    std::vector<bool> used(items.size(), false);
    std::vector<Item> events = done;

    // Every shadow must fuse with a distinct real occurrence of its base.
    auto assign_shadows = [&](auto&& self, std::size_t j) -> void {
      if (j == shadows.size()) {
        std::vector<std::size_t> rest;
        for (auto a : actions)
          if (!used[a]) rest.push_back(a);
        communicate(items, rest, events, out);
        return;
      }
      const std::string& base = items[shadows[j]].label.name;
      for (auto a : actions) {
        if (used[a] || items[a].label.name != base) continue;
        used[a] = true;
        events.push_back(Item{items[a].label, true, true});
        self(self, j + 1);
        events.pop_back();
        used[a] = false;
      }
    };
    assign_shadows(assign_shadows, 0);

    // Drop duplicate outcomes.
    std::vector<std::pair<std::string, std::vector<Item>>> keyed;
    for (auto& o : out) {
      std::vector<std::string> parts;
      for (const auto& it : o)
        parts.push_back(it.label.text + (it.fused ? "*" : "") +
                        (it.label.k == Lbl::K::Tau ? "~" : ""));
      std::sort(parts.begin(), parts.end());
      std::string k;
      for (auto& p : parts) k += p + "\x1f";
      keyed.emplace_back(std::move(k), std::move(o));
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<std::vector<Item>> result;
    for (auto& [k, o] : keyed) result.push_back(std::move(o));
    return result;
  }

  Item comm_event(const std::vector<std::string>& names) const {
    std::string text;
    if (names.size() == 2)
      if (const auto* e = model.comms.lookup(names[0], names[1])) text = e->result;
    auto label = CommResultLabel::of(names);
    if (text.empty()) text = label.str();
    return Item{Lbl{Lbl::K::Comm, text, text, label.participants}, true, true};
  }

  // Completes one candidate: `rest` are unfused real occurrences.
  void communicate(const std::vector<Item>& items, const std::vector<std::size_t>& rest,
                   const std::vector<Item>& events,
                   std::vector<std::vector<Item>>& out) const {
    auto finish = [&](std::vector<Item> evs, const std::vector<std::size_t>& singles) {
      for (auto s : singles) {
        if (config.shadow_policy == ShadowPolicy::Strict &&
            shadow_bases.count(items[s].label.name))
          return;
        evs.push_back(Item{items[s].label, false, true});
      }
      if (config.step_mode == StepMode::Interleave && evs.size() != 1) return;
      if (evs.empty()) return;
      out.push_back(std::move(evs));
    };

    if (config.comm_policy == CommPolicy::Chained) {
      // Connected components under gamma; each must be closed under
      // gamma-partnership to fire as one event.
      std::vector<std::size_t> parent(rest.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
          if (model.comms.lookup(items[rest[i]].label.name, items[rest[j]].label.name))
            parent[find(i)] = find(j);
      std::map<std::size_t, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < rest.size(); ++i) groups[find(i)].push_back(i);
      std::vector<Item> evs = events;
      std::vector<std::size_t> singles;
      for (const auto& [root, members] : groups) {
        if (members.size() == 1) {
          singles.push_back(rest[members[0]]);
          continue;
        }
        std::vector<std::string> names;
        for (auto m : members) names.push_back(items[rest[m]].label.name);
        NameSet present(names.begin(), names.end());
        for (const auto& n : present)
          for (const auto& p : model.comms.partners(n))
            if (!present.count(p)) return;
        evs.push_back(comm_event(names));
      }
      finish(std::move(evs), singles);
      return;
    }

    binary_matchings(items, rest, events, finish);
  }

  template <class Finish>
  void binary_matchings(const std::vector<Item>& items, const std::vector<std::size_t>& rest,
                        const std::vector<Item>& events, Finish&& finish) const {
    // state: 0 = undecided, 1 = single, 2 = paired
    std::vector<int> state(rest.size(), 0);
    std::vector<Item> evs = events;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      while (i < rest.size() && state[i] != 0) ++i;
      if (i == rest.size()) {
        std::vector<std::size_t> singles;
        for (std::size_t k = 0; k < rest.size(); ++k)
          if (state[k] == 1) singles.push_back(rest[k]);
        finish(evs, singles);
        return;
      }
      state[i] = 1;
      self(self, i + 1);
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        if (state[j] != 0) continue;
        const auto& a = items[rest[i]].label.name;
        const auto& b = items[rest[j]].label.name;
        if (!model.comms.lookup(a, b)) continue;
        state[i] = state[j] = 2;
        evs.push_back(comm_event({a, b}));
        self(self, i + 1);
        evs.pop_back();
        state[j] = 0;
      }
      state[i] = 0;
    };
    rec(rec, 0);
  }

  static bool hidden(const Lbl& l, const NameSet& set) {
    switch (l.k) {
      case Lbl::K::Action: return set.count(l.name) || set.count(l.text);
      case Lbl::K::Comm:
        if (set.count(l.text)) return true;
        return std::all_of(l.participants.begin(), l.participants.end(),
                           [&](const std::string& p) { return set.count(p) > 0; });
      default: return false;
    }
  }

  // Applies a hide/block/theta operator to already fused moves.
  void apply_operator(const Term& op, std::vector<Move>& ms) const {
    switch (op.kind) {
      case TermKind::ConflictElim: {
        if (model.conflicts.pairs.empty()) return;
        std::vector<NameSet> names;
        for (const auto& m : ms) {
          NameSet n;
          for (const auto& it : m.items) {
            if (it.label.k == Lbl::K::Action) n.insert(it.label.name);
            if (it.label.k == Lbl::K::Comm)
              n.insert(it.label.participants.begin(), it.label.participants.end());
          }
          names.push_back(std::move(n));
        }
        auto keep = theta_keep(names, model.conflicts);
        std::vector<Move> kept;
        for (std::size_t i = 0; i < ms.size(); ++i)
          if (keep[i]) kept.push_back(std::move(ms[i]));
        ms = std::move(kept);
        return;
      }
      case TermKind::Encaps:
        std::erase_if(ms, [&](const Move& m) {
          return std::any_of(m.items.begin(), m.items.end(), [&](const Item& it) {
            return !it.fused && it.label.k == Lbl::K::Action &&
                   op.names.count(it.label.name);
          });
        });
        return;
      case TermKind::Hide:
        for (auto& m : ms)
          for (auto& it : m.items)
            if (hidden(it.label, op.names)) it.label = Lbl{Lbl::K::Tau, kTau, kTau, {}};
        return;
      default: return;
    }
  }

  void collect_shadow_bases(const TermPtr& t, NameSet& seen_scopes) {
    switch (t->kind) {
      case TermKind::Shadow: shadow_bases.insert(t->action.name); return;
      case TermKind::Var:
        if (seen_scopes.insert(t->scope).second) {
          const auto* p = model.find_behaviour(t->scope);
          if (p)
            for (const auto& [lhs, rhs] : p->equations) collect_shadow_bases(rhs, seen_scopes);
        }
        return;
      default:
        for (const auto& c : t->children) collect_shadow_bases(c, seen_scopes);
    }
  }
};

Semantics::Semantics(const Model& model, Config config)
    : config_(config), impl_(std::make_unique<Impl>(model, config_)) {
  if (config_.max_states == 0) throw Error("max_states must be at least 1");
}

Semantics::~Semantics() = default;

const NameSet& Semantics::shadow_bases() const { return impl_->shadow_bases; }

SystemState Semantics::initial_state(const TermPtr& system) {
  auto& im = *impl_;
  im.cache.clear();
  im.wrappers.clear();
  im.entry_keys.clear();
  im.shadow_bases.clear();

  TermPtr t = canonical(elaborate_sums(system, im.model.domains));
  NameSet scopes;
  im.collect_shadow_bases(t, scopes);
  while (t->kind == TermKind::Hide || t->kind == TermKind::Encaps ||
         t->kind == TermKind::ConflictElim) {
    im.wrappers.push_back(t);
    t = t->children[0];
  }
  SystemState s;
  // Left-to-right flattening of the top-level parallel tree.
  auto flatten = [&](auto&& self, const TermPtr& n) -> void {
    if (n->kind == TermKind::Par || n->kind == TermKind::WholePar) {
      im.join = n->kind;
      self(self, n->children[0]);
      self(self, n->children[1]);
    } else {
      s.components.push_back(n);
    }
  };
  flatten(flatten, t);
  for (const auto& c : s.components)
    im.entry_keys.push_back(c->kind == TermKind::Var ? key(c) : std::string());
  if (config_.round_mode == RoundMode::Barrier)
    s.rounds.assign(s.components.size(), 0);
  return s;
}

std::vector<Semantics::Successor> Semantics::enabled_steps(const SystemState& state) {
  auto& im = *impl_;
  const std::size_t n = state.components.size();
  const bool barrier = config_.round_mode == RoundMode::Barrier && !state.rounds.empty();
  unsigned min_round = 0;
  if (barrier) min_round = *std::min_element(state.rounds.begin(), state.rounds.end());

  std::vector<const std::vector<Move>*> per(n, nullptr);
  for (std::size_t i = 0; i < n; ++i)
    if (!barrier || state.rounds[i] == min_round) per[i] = &im.moves(state.components[i]);

  struct Candidate {
    std::vector<Item> items;
    std::vector<TermPtr> next;
    std::vector<bool> moved;
  };
  std::vector<Candidate> candidates;

  Candidate cur{{}, state.components, std::vector<bool>(n, false)};
  auto choose = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (!cur.items.empty()) candidates.push_back(cur);
      return;
    }
    self(self, i + 1);
    if (!per[i]) return;
    for (const auto& m : *per[i]) {
      auto saved_size = cur.items.size();
      cur.items.insert(cur.items.end(), m.items.begin(), m.items.end());
      cur.next[i] = m.next;
      cur.moved[i] = true;
      self(self, i + 1);
      cur.items.resize(saved_size);
      cur.next[i] = state.components[i];
      cur.moved[i] = false;
    }
  };
  choose(choose, 0);

  std::vector<Move> fused;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (auto& items : im.fuse(candidates[c].items))
      fused.push_back({std::move(items), nullptr, c});
  // Operators apply innermost first.
  for (auto it = im.wrappers.rbegin(); it != im.wrappers.rend(); ++it)
    im.apply_operator(**it, fused);

  std::vector<std::pair<std::string, Successor>> out;
  for (auto& m : fused) {
    const Candidate& cand = candidates[m.tag];
    Successor s;
    for (const auto& it : m.items)
      if (it.label.k != Lbl::K::Tau) s.step.push_back(it.label.text);
    std::sort(s.step.begin(), s.step.end());
    s.next.components = cand.next;
    if (barrier) {
      s.next.rounds = state.rounds;
      for (std::size_t i = 0; i < n; ++i)
        if (cand.moved[i] && !im.entry_keys[i].empty() &&
            key(cand.next[i]) == im.entry_keys[i])
          ++s.next.rounds[i];
      unsigned lo = *std::min_element(s.next.rounds.begin(), s.next.rounds.end());
      for (auto& r : s.next.rounds) r -= lo;
    }
    std::string k = step_str(s.step) + "\x1f" + s.next.key();
    out.emplace_back(std::move(k), std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.first == b.first; }),
            out.end());
  std::vector<Successor> result;
  for (auto& [k, s] : out) result.push_back(std::move(s));
  return result;
}

StepLTS Semantics::generate(const TermPtr& system) {
  StepLTS lts;
  SystemState init = initial_state(system);
  std::unordered_map<std::string, std::size_t> index;
  std::vector<SystemState> states;
  auto intern = [&](SystemState s, std::size_t frontier) {
    std::string k = s.key();
    if (auto it = index.find(k); it != index.end()) return std::pair{it->second, false};
    if (states.size() >= config_.max_states) throw BudgetExceeded(config_.max_states, frontier);
    std::size_t id = lts.add_state(k);
    index.emplace(std::move(k), id);
    states.push_back(std::move(s));
    return std::pair{id, true};
  };
  intern(std::move(init), 0);
  lts.set_initial(0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t s = frontier.front();
    frontier.pop_front();
    for (auto& succ : enabled_steps(states[s])) {
      auto [id, fresh] = intern(std::move(succ.next), frontier.size() + 1);
      if (fresh) frontier.push_back(id);
      lts.add_transition(s, succ.step, id);
    }
  }
  lts.seal();
  return lts;
}

StepLTS generate_lts(const TermPtr& system, const Model& model, const Config& config) {
  Semantics sem(model, config);
  return sem.generate(system);
}

TermPtr system_term(const Model& model, const std::string& name) {
  if (const auto* s = model.find_system(name)) return s->term;
  if (const auto* p = model.find_behaviour(name)) return var(p->entry(), p->name);
  throw ResolveError(name, "unknown system or process '" + name + "'");
}

}  // namespace aptc

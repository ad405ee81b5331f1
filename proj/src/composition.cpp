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

#include "aptc/composition.hpp"

#include <algorithm>
#include <set>

#include "aptc/semantics.hpp"

namespace aptc {

namespace {

const Participant& participant(const Model& model, const std::string& process,
                               Participant::Role role) {
  const Participant* p = model.find_participant(process);
  if (!p || p->role != role)
    throw ResolveError(process, std::string("'") + process + "' is not declared as " +
                                    (role == Participant::Role::Wso ? "a wso" : "a ws"));
  return *p;
}

// "A1(d1)" -> act("A1", {"d1"}).
TermPtr label_term(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos) return act(text);
  std::vector<std::string> args;
  std::string cur;
  for (std::size_t i = open + 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ',' || c == ')') {
      args.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return act(text.substr(0, open), std::move(args));
}

TermPtr step_term(const Step& step) {
  TermPtr t = label_term(step.front());
  for (std::size_t i = 1; i < step.size(); ++i) t = par(t, label_term(step[i]));
  return t;
}

std::size_t count_var(const TermPtr& t, const std::string& name) {
  if (t->kind == TermKind::Var) return t->name == name ? 1 : 0;
  std::size_t n = 0;
  for (const auto& c : t->children) n += count_var(c, name);
  return n;
}

TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& by) {
  if (t->kind == TermKind::Var) return t->name == name ? by : t;
  if (t->children.empty()) return t;
  auto copy = std::make_shared<Term>(*t);
  for (auto& c : copy->children) c = substitute(c, name, by);
  return copy;
}

// One equation per state of a label-deterministic LTS, then single-use
// non-entry variables are inlined.
std::optional<RecursiveSpec> present(const StepLTS& lts, const std::string& name) {
  std::vector<std::string> vars(lts.num_states());
  for (std::size_t s = 0; s < lts.num_states(); ++s)
    vars[s] = s == lts.initial() ? name : name + std::to_string(s);
  RecursiveSpec spec;
  spec.name = name;
  std::vector<std::pair<std::string, TermPtr>> eqs;
  for (std::size_t s = 0; s < lts.num_states(); ++s) {
    std::vector<TermPtr> branches;
    std::set<std::size_t> seen;
    for (const auto& t : lts.out(s)) {
      if (t.label == 0 || !seen.insert(t.label).second) return std::nullopt;
      branches.push_back(seq(step_term(lts.label(t.label)), var(vars[t.to], name)));
    }
    TermPtr body = branches.empty()        ? deadlock()
                   : branches.size() == 1 ? branches.front()
                                          : alt(std::move(branches));
    eqs.emplace_back(vars[s], body);
  }
  std::rotate(eqs.begin(), eqs.begin() + static_cast<std::ptrdiff_t>(lts.initial()),
              eqs.begin() + static_cast<std::ptrdiff_t>(lts.initial()) + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < eqs.size(); ++i) {
      const auto& [v, body] = eqs[i];
      std::size_t uses = 0;
      for (const auto& e : eqs) uses += count_var(e.second, v);
      if (uses != 1 || count_var(body, v) != 0) continue;
      TermPtr by = body;
      std::string gone = v;
      eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(i));
      for (auto& e : eqs) e.second = substitute(e.second, gone, by);
      changed = true;
      break;
    }
  }
  spec.equations = std::move(eqs);
  return spec;
}

// Drops shadow prefixes: @a . X becomes X, a bare @a terminates.
TermPtr strip_shadows(const TermPtr& t) {
  if (t->kind == TermKind::Shadow) return nil();
  if (t->kind == TermKind::Seq && t->children[0]->kind == TermKind::Shadow)
    return strip_shadows(t->children[1]);
  if (t->children.empty()) return t;
  auto copy = std::make_shared<Term>(*t);
  for (auto& c : copy->children) c = strip_shadows(c);
  return copy;
}

StepLTS behaviour_lts(const Model& model, const std::string& name, const Config& config) {
  return generate_lts(system_term(model, name), model, config);
}

// Participants of a communication label: c(p,q,...) or a declared result.
std::vector<std::string> comm_participants(const std::string& label, const CommTable& comms) {
  for (const auto& e : comms.entries)
    if (e.result == label) return {e.left, e.right};
  if (label.rfind("c(", 0) == 0 && label.back() == ')') {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 2; i < label.size(); ++i) {
      char c = label[i];
      if (c == ',' || c == ')') {
        out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    return out;
  }
  return {};
}

}  // namespace

std::string AbDef::presentation_text() const {
  if (!presentation) return {};
  std::string out;
  for (const auto& [v, t] : presentation->equations) out += v + " = " + render_term(t) + "\n";
  return out;
}

WsoDef wso_def(const Model& model, const std::string& process) {
  const Participant& p = participant(model, process, Participant::Role::Wso);
  return {p.process, p.internal, p.claimed};
}

WsDef ws_def(const Model& model, const std::string& process) {
  const Participant& p = participant(model, process, Participant::Role::Ws);
  const RecursiveSpec* spec = model.find_process(process);
  if (!spec) throw ResolveError(process, "unknown process '" + process + "'");
  WsDef d{process, p.serves, {}};
  NameSet ops;
  for (const auto& a : alphabet(*spec, model.domains).actions) ops.insert(a.name);
  d.operations.assign(ops.begin(), ops.end());
  return d;
}

CompositionModel composition_model(const Model& model, const std::string& name) {
  const CompositionDecl* decl = model.find_composition(name);
  if (!decl) throw ResolveError(name, "unknown composition '" + name + "'");
  CompositionModel c;
  c.name = name;
  for (const auto& p : model.participants) {
    c.parts.push_back(p.process);
    if (p.role == Participant::Role::Wso)
      c.wsos.push_back(wso_def(model, p.process));
    else
      c.wss.push_back(ws_def(model, p.process));
  }
  const NamedSet* hs = model.find_set(decl->hide_set);
  if (!hs) throw ResolveError(decl->hide_set, "unknown set '" + decl->hide_set + "'");
  c.hide_set = hs->names;
  c.hide_ref = hs->name;
  if (const NamedSet* bs = decl->block_set.empty() ? nullptr : model.find_set(decl->block_set)) {
    c.encaps_set = bs->names;
    c.encaps_ref = bs->name;
  } else {
    c.encaps_set = model.comms.domain();
  }
  if (!decl->contract.empty()) {
    const Contract* k = model.find_contract(decl->contract);
    if (!k) throw ResolveError(decl->contract, "unknown contract '" + decl->contract + "'");
    c.contract = WscContract{k->name, k->pairs, k->protocol};
  }
  return c;
}

std::string ab_name(const std::string& wso) {
  if (wso.rfind("WSO", 0) == 0 && wso.size() > 3) return "AB" + wso.substr(3);
  return "AB_" + wso;
}

AbDef derive_ab(const WsoDef& wso, const Model& model, const Config& config) {
  const RecursiveSpec* spec = model.find_process(wso.process);
  if (!spec) throw ResolveError(wso.process, "unknown process '" + wso.process + "'");
  TermPtr sys = hide(wso.internal, var(spec->entry(), spec->name));
  AbDef ab;
  ab.source = wso.process;
  ab.behavior = minimize(generate_lts(sys, model, config), Reduction::Branching);
  const std::string name = ab_name(wso.process);
  ab.presentation = present(ab.behavior, name);

  if (wso.claimed) {
    Model with_claim = model;
    RecursiveSpec loop;
    loop.name = "claim:" + name;
    loop.equations.emplace_back(name, seq(wso.claimed, var(name, loop.name)));
    with_claim.specs.push_back(loop);
    StepLTS claimed = generate_lts(var(name, loop.name), with_claim, config);
    if (!branching_bisim(ab.behavior, claimed, false).holds) {
      std::string internal;
      for (const auto& n : wso.internal) internal += (internal.empty() ? "" : ", ") + n;
      std::string derived = ab.presentation ? ab.presentation_text() : "(no term form)\n";
      derived.pop_back();
      ab.claim_note = "claimed " + name + " = " + render_term(wso.claimed) +
                      " is inconsistent with internal {" + internal + "}; derived " + derived;
    }
  }
  return ab;
}

Verdict correspondence_check(const AbDef& ab, const WsDef& ws,
                             const std::map<std::string, std::string>& mapping,
                             const Model& model, const Config& config) {
  std::set<std::string> targets;
  for (const auto& [from, to] : mapping)
    if (!targets.insert(to).second)
      throw Error("mapping is not injective: two labels map to '" + to + "'");

  auto fail = [](std::string reason) {
    Verdict v;
    Counterexample cx;
    cx.reason = std::move(reason);
    v.counterexample = std::move(cx);
    return v;
  };
  if (!ws.serves.empty() && ws.serves != ab.source)
    return fail(ws.process + " serves " + ws.serves + ", not " + ab.source);
  std::set<std::string> visible;
  for (const auto& step : ab.behavior.labels())
    for (const auto& l : step) visible.insert(l);
  std::set<std::string> keys;
  for (const auto& [from, to] : mapping) keys.insert(from);
  const std::set<std::string> ops(ws.operations.begin(), ws.operations.end());
  if (visible != keys || targets != ops)
    return fail(ab_name(ab.source) + " has " + std::to_string(visible.size()) +
                " visible labels, " + ws.process + " has " + std::to_string(ops.size()) +
                " operations, mapping covers " + std::to_string(mapping.size()));

  Model stripped = model;
  for (auto& p : stripped.processes)
    if (p.name == ws.process)
      for (auto& eq : p.equations) eq.second = strip_shadows(eq.second);
  StepLTS ws_lts = behaviour_lts(stripped, ws.process, config);
  return strong_step_bisim(rename_labels(ab.behavior, mapping), ws_lts);
}

TermPtr assemble_system(const CompositionModel& comp, const Model& model) {
  if (comp.parts.empty()) throw Error("composition '" + comp.name + "' has no participants");
  TermPtr body;
  for (const auto& name : comp.parts) {
    const RecursiveSpec* p = model.find_process(name);
    if (!p) throw ResolveError(name, "unknown process '" + name + "'");
    TermPtr v = var(p->entry(), p->name);
    body = body ? whole_par(body, v) : v;
  }
  return hide(comp.hide_set,
              encaps(comp.encaps_set, conflict_elim(body), comp.encaps_ref,
                     comp.encaps_ref.empty()),
              comp.hide_ref);
}

Verdict compare(const StepLTS& left, const StepLTS& right, Relation relation) {
  switch (relation) {
    case Relation::StrongStep:
      return strong_step_bisim(left, right);
    case Relation::Branching:
      return branching_bisim(left, right, false);
    case Relation::RootedBranching:
      return branching_bisim(left, right, true);
    case Relation::WeakTraceInclusion:
      return weak_trace_inclusion(left, right);
  }
  throw Error("unknown relation");
}

Verdict verify_system(const CompositionModel& comp, const std::string& spec,
                      Relation relation, const Model& model, const Config& config) {
  StepLTS sys = prune_dead(generate_lts(assemble_system(comp, model), model, config));
  return compare(sys, behaviour_lts(model, spec, config), relation);
}

Verdict wsc_conformance(const CompositionModel& comp, const Model& model,
                        const Config& config) {
  if (!comp.contract) throw Error("composition '" + comp.name + "' has no contract");
  const WscContract& k = *comp.contract;
  for (const auto& p : k.pairs)
    if (!model.comms.lookup(p.left, p.right))
      throw Error("contract pair (" + p.left + ", " + p.right + ") is not in the communication table");

  TermPtr body = assemble_system(comp, model)->children[0];  // drop the hiding
  StepLTS sys = prune_dead(generate_lts(body, model, config));

  StepLTS projected;
  for (std::size_t s = 0; s < sys.num_states(); ++s) projected.add_state(sys.state_key(s));
  projected.set_initial(sys.initial());
  for (const auto& t : sys.transitions()) {
    std::set<std::string> symbols;
    for (const auto& l : sys.label(t.label)) {
      auto parts = comm_participants(l, model.comms);
      for (const auto& p : k.pairs)
        if (std::count(parts.begin(), parts.end(), p.left) &&
            std::count(parts.begin(), parts.end(), p.right))
          symbols.insert(p.symbol);
    }
    projected.add_transition(t.from, Step(symbols.begin(), symbols.end()), t.to);
  }
  projected.seal();
  return branching_bisim(projected, behaviour_lts(model, k.protocol, config), false);
}

}  // namespace aptc

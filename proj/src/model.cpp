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

#include <algorithm>
#include <sstream>

#include "aptc/model.hpp"

namespace aptc {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::StrongStep: return "strong-step-bisim";
    case Relation::Branching: return "branching-bisim";
    case Relation::RootedBranching: return "rooted-branching-bisim";
    case Relation::WeakTraceInclusion: return "weak-trace-inclusion";
  }
  return "?";
}

std::string_view relation_token(Relation r) {
  switch (r) {
    case Relation::StrongStep: return "~s";
    case Relation::Branching: return "~bb";
    case Relation::RootedBranching: return "~rbb";
    case Relation::WeakTraceInclusion: return "<=wt";
  }
  return "?";
}

std::string Operand::str() const {
  return abstract_of ? "ab(" + name + ")" : name;
}

std::string CheckGoal::label() const {
  return left.str() + " " + std::string(relation_token(relation)) + " " +
         right.str();
}

namespace {

template <class T, class F>
const T* find_in(const std::vector<T>& v, F&& pred) {
  auto it = std::find_if(v.begin(), v.end(), pred);
  return it == v.end() ? nullptr : &*it;
}

}  // namespace

const RecursiveSpec* Model::find_process(std::string_view n) const {
  return find_in(processes, [&](const auto& p) { return p.name == n; });
}
const RecursiveSpec* Model::find_spec(std::string_view n) const {
  return find_in(specs, [&](const auto& p) { return p.name == n; });
}
const RecursiveSpec* Model::find_behaviour(std::string_view n) const {
  if (const auto* p = find_process(n)) return p;
  return find_spec(n);
}
const NamedSystem* Model::find_system(std::string_view n) const {
  return find_in(systems, [&](const auto& s) { return s.name == n; });
}
const NamedSet* Model::find_set(std::string_view n) const {
  return find_in(action_sets, [&](const auto& s) { return s.name == n; });
}
const Participant* Model::find_participant(std::string_view n) const {
  return find_in(participants, [&](const auto& p) { return p.process == n; });
}
const Contract* Model::find_contract(std::string_view n) const {
  return find_in(contracts, [&](const auto& c) { return c.name == n; });
}
const CompositionDecl* Model::find_composition(std::string_view n) const {
  return find_in(compositions, [&](const auto& c) { return c.name == n; });
}

namespace {

// Binding strength, loosest first.  Prefix forms extend as far right as
// possible, so they need parentheses anywhere but the top.
int precedence(TermKind k) {
  switch (k) {
    case TermKind::Sum:
    case TermKind::Hide:
    case TermKind::Encaps:
    case TermKind::ConflictElim: return 0;
    case TermKind::Alt: return 1;
    case TermKind::Par:
    case TermKind::WholePar: return 2;
    case TermKind::Seq: return 3;
    default: return 4;
  }
}

std::string join(const NameSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : s) {
    out += first ? " " : ", ";
    out += n;
    first = false;
  }
  return out + (s.empty() ? "}" : " }");
}

void render(const TermPtr& t, int ctx, bool sys, std::string& out) {
  const int p = precedence(t->kind);
  const bool paren = p < ctx;
  if (paren) out += '(';
  auto set_of = [&](const Term& n) {
    return n.set_ref.empty() ? join(n.names) : n.set_ref;
  };
  switch (t->kind) {
    case TermKind::Nil: out += "nil"; break;
    case TermKind::Deadlock: out += "delta"; break;
    case TermKind::Act: out += t->action.str(); break;
    case TermKind::Shadow: out += "@" + t->action.name; break;
    case TermKind::Var: out += sys && !t->scope.empty() ? t->scope : t->name; break;
    case TermKind::Seq:
      render(t->children[0], 4, sys, out);
      out += " . ";
      render(t->children[1], 3, sys, out);
      break;
    case TermKind::Alt:
      for (std::size_t i = 0; i < t->children.size(); ++i) {
        if (i) out += " + ";
        render(t->children[i], 2, sys, out);
      }
      break;
    case TermKind::Par:
    case TermKind::WholePar:
      render(t->children[0], 2, sys, out);
      out += t->kind == TermKind::Par ? " || " : " <> ";
      render(t->children[1], 3, sys, out);
      break;
    case TermKind::Sum:
      out += "sum " + t->name + " in " + t->domain + " . ";
      render(t->children[0], 0, sys, out);
      break;
    case TermKind::Hide:
      out += "hide " + set_of(*t) + " in ";
      render(t->children[0], 0, sys, out);
      break;
    case TermKind::Encaps:
      out += "block " + set_of(*t) + " in ";
      render(t->children[0], 0, sys, out);
      break;
    case TermKind::ConflictElim:
      out += "theta ";
      render(t->children[0], 0, sys, out);
      break;
  }
  if (paren) out += ')';
}

void render_overrides(const ConfigOverrides& o, std::ostream& os) {
  if (o.empty()) return;
  std::vector<std::string> parts;
  if (o.comm_policy) parts.push_back("comm=" + std::string(to_string(*o.comm_policy)));
  if (o.step_mode) parts.push_back("step=" + std::string(to_string(*o.step_mode)));
  if (o.round_mode) parts.push_back("round=" + std::string(to_string(*o.round_mode)));
  if (o.shadow_policy)
    parts.push_back("shadow=" + std::string(to_string(*o.shadow_policy)));
  if (o.max_states) parts.push_back("max_states=" + std::to_string(*o.max_states));
  if (o.prune_dead) parts.push_back(std::string("prune=") + (*o.prune_dead ? "on" : "off"));
  os << " [";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
  os << "]";
}

}  // namespace

std::string render_term(const TermPtr& t, bool system_context) {
  std::string out;
  render(t, 0, system_context, out);
  return out;
}

std::string render_model(const Model& m) {
  std::ostringstream os;
  auto section = [&os](bool nonempty) {
    if (nonempty && os.tellp() > 0) os << "\n";
  };

  section(!m.domains.empty());
  for (const auto& d : m.domains) {
    os << "domain " << d.name << " = {";
    for (std::size_t i = 0; i < d.values.size(); ++i)
      os << (i ? ", " : " ") << d.values[i];
    os << (d.values.empty() ? "}" : " }") << "\n";
  }
  auto behaviours = [&](const std::vector<RecursiveSpec>& list, const char* kw) {
    for (const auto& p : list) {
      section(true);
      os << kw << " " << p.name << " {\n";
      for (const auto& [lhs, rhs] : p.equations)
        os << "  " << lhs << " = " << render_term(rhs) << "\n";
      os << "}\n";
    }
  };
  behaviours(m.processes, "process");
  behaviours(m.specs, "spec");

  section(!m.comms.entries.empty());
  for (const auto& e : m.comms.entries)
    os << "comm " << e.left << ", " << e.right << " -> " << e.result << "\n";
  section(!m.conflicts.pairs.empty());
  for (const auto& [a, b] : m.conflicts.pairs)
    os << "conflict " << a << " # " << b << "\n";
  section(!m.action_sets.empty());
  for (const auto& s : m.action_sets)
    os << "set " << s.name << " = " << join(s.names) << "\n";

  section(!m.participants.empty());
  for (const auto& p : m.participants) {
    if (p.role == Participant::Role::Wso) {
      os << "wso " << p.process << " internal " << join(p.internal);
      if (p.claimed) os << " claims " << render_term(p.claimed);
    } else {
      os << "ws " << p.process;
      if (!p.serves.empty()) os << " serves " << p.serves;
      if (!p.mapping.empty()) {
        os << " {";
        for (std::size_t i = 0; i < p.mapping.size(); ++i)
          os << (i ? ", " : " ") << p.mapping[i].first << " -> "
             << p.mapping[i].second;
        os << " }";
      }
    }
    os << "\n";
  }
  for (const auto& c : m.contracts) {
    section(true);
    os << "contract " << c.name << " protocol " << c.protocol << " {\n";
    for (const auto& cp : c.pairs)
      os << "  " << cp.symbol << " = " << cp.left << " ~ " << cp.right << "\n";
    os << "}\n";
  }

  section(!m.systems.empty());
  for (const auto& s : m.systems)
    os << "system " << s.name << " = " << render_term(s.term, true) << "\n";
  section(!m.compositions.empty());
  for (const auto& c : m.compositions) {
    os << "composition " << c.name << " hide " << c.hide_set;
    if (!c.block_set.empty()) os << " block " << c.block_set;
    if (!c.contract.empty()) os << " contract " << c.contract;
    os << "\n";
  }
  section(!m.checks.empty());
  for (const auto& g : m.checks) {
    os << "check " << g.label();
    render_overrides(g.overrides, os);
    os << "\n";
  }
  return os.str();
}

std::vector<Violation> validate_model(const Model& m) {
  std::vector<Violation> out = validate_domains(m.domains);
  auto more = validate_comms(m.comms);
  out.insert(out.end(), more.begin(), more.end());
  for (const auto* list : {&m.processes, &m.specs})
    for (const auto& p : *list) {
      auto v = validate_spec(p, m.domains, CommTable{});
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

}  // namespace aptc

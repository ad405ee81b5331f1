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

#include "aptc/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace aptc {

std::string ActionLabel::str() const {
  if (args.empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i];
  }
  return s + ")";
}

CommResultLabel CommResultLabel::of(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return CommResultLabel{std::move(names)};
}

std::string CommResultLabel::str() const {
  std::string s = "c(";
  for (std::size_t i = 0; i < participants.size(); ++i) {
    if (i) s += ",";
    s += participants[i];
  }
  return s + ")";
}

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr binary(TermKind k, TermPtr a, TermPtr b) {
  Term t;
  t.kind = k;
  t.children = {std::move(a), std::move(b)};
  return make(std::move(t));
}

}  // namespace

TermPtr nil() {
  static const TermPtr n = [] {
    Term t;
    t.kind = TermKind::Nil;
    return make(std::move(t));
  }();
  return n;
}

TermPtr deadlock() {
  static const TermPtr d = [] {
    Term t;
    t.kind = TermKind::Deadlock;
    return make(std::move(t));
  }();
  return d;
}

TermPtr act(std::string name, std::vector<std::string> args) {
  Term t;
  t.kind = TermKind::Act;
  t.action = ActionLabel{std::move(name), std::move(args)};
  return make(std::move(t));
}

TermPtr shadow(std::string base) {
  Term t;
  t.kind = TermKind::Shadow;
  t.action.name = std::move(base);
  return make(std::move(t));
}

TermPtr var(std::string name, std::string scope) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  t.scope = std::move(scope);
  return make(std::move(t));
}

TermPtr seq(TermPtr head, TermPtr tail) {
  return binary(TermKind::Seq, std::move(head), std::move(tail));
}

TermPtr alt(std::vector<TermPtr> branches) {
  if (branches.empty()) throw Error("alternative with no branches");
  Term t;
  t.kind = TermKind::Alt;
  t.children = std::move(branches);
  return make(std::move(t));
}

TermPtr par(TermPtr left, TermPtr right) {
  return binary(TermKind::Par, std::move(left), std::move(right));
}

TermPtr whole_par(TermPtr left, TermPtr right) {
  return binary(TermKind::WholePar, std::move(left), std::move(right));
}

TermPtr sum(std::string binder, std::string domain, TermPtr body) {
  Term t;
  t.kind = TermKind::Sum;
  t.name = std::move(binder);
  t.domain = std::move(domain);
  t.children = {std::move(body)};
  return make(std::move(t));
}

TermPtr hide(NameSet names, TermPtr body, std::string set_ref) {
  Term t;
  t.kind = TermKind::Hide;
  t.names = std::move(names);
  t.set_ref = std::move(set_ref);
  t.children = {std::move(body)};
  return make(std::move(t));
}

TermPtr encaps(NameSet names, TermPtr body, std::string set_ref,
               bool default_set) {
  Term t;
  t.kind = TermKind::Encaps;
  t.names = std::move(names);
  t.set_ref = std::move(set_ref);
  t.default_set = default_set;
  t.children = {std::move(body)};
  return make(std::move(t));
}

TermPtr conflict_elim(TermPtr body) {
  Term t;
  t.kind = TermKind::ConflictElim;
  t.children = {std::move(body)};
  return make(std::move(t));
}

namespace {

void write_key(const TermPtr& t, std::string& out) {
  auto set = [&out](const Term& n) {
    out += n.default_set ? "{*" : "{";
    out += n.set_ref;
    out += ':';
    bool first = true;
    for (const auto& x : n.names) {
      if (!first) out += ',';
      out += x;
      first = false;
    }
    out += '}';
  };
  switch (t->kind) {
    case TermKind::Nil: out += '#'; return;
    case TermKind::Deadlock: out += '!'; return;
    case TermKind::Act: out += t->action.str(); return;
    case TermKind::Shadow: out += '@' + t->action.name; return;
    case TermKind::Var: out += '$' + t->scope + "::" + t->name; return;
    case TermKind::Seq: out += ".("; break;
    case TermKind::Alt: out += "+("; break;
    case TermKind::Par: out += "|("; break;
    case TermKind::WholePar: out += "<("; break;
    case TermKind::Sum: out += "S[" + t->name + ":" + t->domain + "]("; break;
    case TermKind::Hide: out += "H"; set(*t); out += '('; break;
    case TermKind::Encaps: out += "E"; set(*t); out += '('; break;
    case TermKind::ConflictElim: out += "T("; break;
  }
  for (std::size_t i = 0; i < t->children.size(); ++i) {
    if (i) out += ' ';
    write_key(t->children[i], out);
  }
  out += ')';
}

}  // namespace

std::string key(const TermPtr& t) {
  std::string out;
  write_key(t, out);
  return out;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->action != b->action || a->name != b->name ||
      a->scope != b->scope || a->domain != b->domain ||
      a->set_ref != b->set_ref || a->names != b->names ||
      a->default_set != b->default_set ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!equal(a->children[i], b->children[i])) return false;
  return true;
}

const std::string& RecursiveSpec::entry() const {
  if (equations.empty()) throw Error("process '" + name + "' has no equations");
  return equations.front().first;
}

const TermPtr* RecursiveSpec::find(const std::string& v) const {
  for (const auto& [lhs, rhs] : equations)
    if (lhs == v) return &rhs;
  return nullptr;
}

bool RecursiveSpec::operator==(const RecursiveSpec& o) const {
  if (name != o.name || equations.size() != o.equations.size()) return false;
  for (std::size_t i = 0; i < equations.size(); ++i)
    if (equations[i].first != o.equations[i].first ||
        !equal(equations[i].second, o.equations[i].second))
      return false;
  return true;
}

const CommEntry* CommTable::lookup(const std::string& a,
                                   const std::string& b) const {
  for (const auto& e : entries)
    if ((e.left == a && e.right == b) || (e.left == b && e.right == a))
      return &e;
  return nullptr;
}

NameSet CommTable::domain() const {
  NameSet out;
  for (const auto& e : entries) {
    out.insert(e.left);
    out.insert(e.right);
  }
  return out;
}

NameSet CommTable::partners(const std::string& a) const {
  NameSet out;
  for (const auto& e : entries) {
    if (e.left == a) out.insert(e.right);
    if (e.right == a) out.insert(e.left);
  }
  return out;
}

bool ConflictRelation::conflicts(const std::string& a,
                                 const std::string& b) const {
  for (const auto& [x, y] : pairs)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

std::vector<Violation> validate_domains(const std::vector<DataDomain>& domains) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& d : domains) {
    if (!seen.insert(d.name).second)
      out.push_back({Violation::Kind::BadDomain, d.name,
                     "domain '" + d.name + "' declared twice"});
    if (d.values.empty())
      out.push_back({Violation::Kind::BadDomain, d.name,
                     "domain '" + d.name + "' is empty"});
    std::set<std::string> vals(d.values.begin(), d.values.end());
    if (vals.size() != d.values.size())
      out.push_back({Violation::Kind::BadDomain, d.name,
                     "domain '" + d.name + "' repeats a constant"});
  }
  return out;
}

std::vector<Violation> validate_comms(const CommTable& comms) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < comms.entries.size(); ++i) {
    const auto& e = comms.entries[i];
    if (e.left == e.right)
      out.push_back({Violation::Kind::SelfComm, e.left,
                     "action '" + e.left + "' communicates with itself"});
    for (std::size_t j = 0; j < i; ++j) {
      const auto& f = comms.entries[j];
      if ((f.left == e.left && f.right == e.right) ||
          (f.left == e.right && f.right == e.left)) {
        out.push_back({Violation::Kind::DuplicateComm, e.left + "," + e.right,
                       "duplicate communication for pair (" + e.left + ", " +
                           e.right + ")"});
        break;
      }
    }
  }
  return out;
}

std::vector<Violation> validate_spec(const RecursiveSpec& spec,
                                     const std::vector<DataDomain>& domains,
                                     const CommTable& comms) {
  std::vector<Violation> out;
  std::set<std::string> constants;
  std::set<std::string> domain_names;
  for (const auto& d : domains) {
    domain_names.insert(d.name);
    constants.insert(d.values.begin(), d.values.end());
  }

  std::function<void(const TermPtr&, std::vector<std::string>&)> walk =
      [&](const TermPtr& t, std::vector<std::string>& binders) {
        switch (t->kind) {
          case TermKind::Var:
            if (!spec.find(t->name))
              out.push_back({Violation::Kind::UnboundVariable, t->name,
                             "variable '" + t->name + "' has no equation in '" +
                                 spec.name + "'"});
            return;
          case TermKind::Act:
            if (t->action.name == kTau || t->action.name == kDelta)
              out.push_back({Violation::Kind::ReservedName, t->action.name,
                             "'" + t->action.name + "' is reserved"});
            for (const auto& a : t->action.args)
              if (!constants.count(a) &&
                  std::find(binders.begin(), binders.end(), a) == binders.end())
                out.push_back({Violation::Kind::UnknownConstant, a,
                               "'" + a + "' is neither a data constant nor a "
                                         "sum binder"});
            return;
          case TermKind::Sum:
            if (!domain_names.count(t->domain))
              out.push_back({Violation::Kind::UnknownDomain, t->domain,
                             "unknown domain '" + t->domain + "'"});
            if (std::find(binders.begin(), binders.end(), t->name) !=
                binders.end())
              out.push_back({Violation::Kind::ReboundBinder, t->name,
                             "binder '" + t->name + "' is already bound"});
            binders.push_back(t->name);
            walk(t->children[0], binders);
            binders.pop_back();
            return;
          default:
            for (const auto& c : t->children) walk(c, binders);
        }
      };

  std::set<std::string> lhs;
  for (const auto& [name, rhs] : spec.equations) {
    if (!lhs.insert(name).second)
      out.push_back({Violation::Kind::UnboundVariable, name,
                     "variable '" + name + "' defined twice"});
    std::vector<std::string> binders;
    walk(rhs, binders);
  }
  auto more = validate_comms(comms);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

namespace {

// True when `t` cannot terminate without first performing something.
bool guards(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Nil: return false;
    case TermKind::Deadlock:
    case TermKind::Act:
    case TermKind::Shadow:
    case TermKind::Var: return true;
    case TermKind::Seq: return guards(t->children[0]) || guards(t->children[1]);
    case TermKind::Alt:
      return std::all_of(t->children.begin(), t->children.end(), guards);
    case TermKind::Par:
    case TermKind::WholePar:
      return guards(t->children[0]) || guards(t->children[1]);
    default: return guards(t->children[0]);
  }
}

bool all_guarded(const TermPtr& t, bool guarded) {
  switch (t->kind) {
    case TermKind::Var: return guarded;
    case TermKind::Seq:
      return all_guarded(t->children[0], guarded) &&
             all_guarded(t->children[1], guarded || guards(t->children[0]));
    default:
      for (const auto& c : t->children)
        if (!all_guarded(c, guarded)) return false;
      return true;
  }
}

}  // namespace

GuardednessResult guardedness_check(const RecursiveSpec& spec) {
  GuardednessResult r;
  for (const auto& [name, rhs] : spec.equations) {
    if (!all_guarded(rhs, false)) {
      r.guarded = false;
      r.offenders.push_back(name);
    }
  }
  return r;
}

namespace {

TermPtr substitute(const TermPtr& t, const std::string& binder,
                   const std::string& value) {
  switch (t->kind) {
    case TermKind::Act: {
      auto args = t->action.args;
      bool changed = false;
      for (auto& a : args)
        if (a == binder) {
          a = value;
          changed = true;
        }
      return changed ? act(t->action.name, std::move(args)) : t;
    }
    case TermKind::Sum:
      // The inner binder shadows ours; validation rejects this anyway.
      if (t->name == binder) return t;
      [[fallthrough]];
    default: {
      if (t->children.empty()) return t;
      Term copy = *t;
      for (auto& c : copy.children) c = substitute(c, binder, value);
      return std::make_shared<const Term>(std::move(copy));
    }
  }
}

}  // namespace

TermPtr elaborate_sums(const TermPtr& t, const std::vector<DataDomain>& domains) {
  if (t->kind == TermKind::Sum) {
    auto it = std::find_if(domains.begin(), domains.end(),
                           [&](const DataDomain& d) { return d.name == t->domain; });
    if (it == domains.end()) throw Error("unknown domain '" + t->domain + "'");
    std::vector<TermPtr> branches;
    for (const auto& v : it->values)
      branches.push_back(
          elaborate_sums(substitute(t->children[0], t->name, v), domains));
    return alt(std::move(branches));
  }
  if (t->children.empty()) return t;
  Term copy = *t;
  bool changed = false;
  for (auto& c : copy.children) {
    auto e = elaborate_sums(c, domains);
    changed |= e != c;
    c = std::move(e);
  }
  return changed ? std::make_shared<const Term>(std::move(copy)) : t;
}

RecursiveSpec elaborate_sums(const RecursiveSpec& spec,
                             const std::vector<DataDomain>& domains) {
  RecursiveSpec out{spec.name, {}};
  for (const auto& [name, rhs] : spec.equations)
    out.equations.emplace_back(name, elaborate_sums(rhs, domains));
  return out;
}

namespace {

void collect(const TermPtr& t, Alphabet& a) {
  switch (t->kind) {
    case TermKind::Act:
      if (t->action.name != kTau && t->action.name != kDelta)
        a.actions.insert(t->action);
      return;
    case TermKind::Shadow: a.shadow_bases.insert(t->action.name); return;
    default:
      for (const auto& c : t->children) collect(c, a);
  }
}

}  // namespace

Alphabet alphabet(const RecursiveSpec& spec,
                  const std::vector<DataDomain>& domains) {
  Alphabet a;
  for (const auto& [name, rhs] : elaborate_sums(spec, domains).equations)
    collect(rhs, a);
  return a;
}

void collect_names(const TermPtr& t, NameSet& actions, NameSet& shadows) {
  switch (t->kind) {
    case TermKind::Act: actions.insert(t->action.name); return;
    case TermKind::Shadow: shadows.insert(t->action.name); return;
    default:
      for (const auto& c : t->children) collect_names(c, actions, shadows);
  }
}

}  // namespace aptc

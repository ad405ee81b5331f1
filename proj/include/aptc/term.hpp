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

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aptc {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name or data-constant set, kept sorted and duplicate-free.
using NameSet = std::set<std::string>;

struct DataDomain {
  std::string name;
  std::vector<std::string> values;

  bool operator==(const DataDomain&) const = default;
};

/// An atomic action such as `A2` or `A1(d1)`.  Before sum elaboration an
/// argument may still name a sum binder.
struct ActionLabel {
  std::string name;
  std::vector<std::string> args;

  std::string str() const;
  bool operator==(const ActionLabel&) const = default;
  auto operator<=>(const ActionLabel&) const = default;
};

/// Result of a communication; participants are kept sorted so that the
/// label has one identity regardless of the order the partners fired in.
struct CommResultLabel {
  std::vector<std::string> participants;

  static CommResultLabel of(std::vector<std::string> names);
  /// Canonical text `c(p1,p2,...)`.
  std::string str() const;
  bool operator==(const CommResultLabel&) const = default;
};

enum class TermKind {
  Nil,  // successful termination; never written in source
  Deadlock,
  Act,
  Shadow,
  Var,
  Seq,
  Alt,
  Par,
  WholePar,
  Sum,
  Hide,
  Encaps,
  ConflictElim,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable process term.  Which fields are meaningful depends on `kind`:
///
///   Act           action
///   Shadow        action.name is the shadowed base
///   Var           name (equation variable), scope (owning process)
///   Seq/Par/...   children[0], children[1]
///   Alt           children (n-ary, source order)
///   Sum           name (binder), domain, children[0]
///   Hide/Encaps   names (resolved set), set_ref (declared set name or
///                 empty for an inline set), children[0]
///   ConflictElim  children[0]
struct Term {
  TermKind kind = TermKind::Deadlock;
  ActionLabel action;
  std::string name;
  std::string scope;
  std::string domain;
  std::string set_ref;
  NameSet names;
  bool default_set = false;  // Encaps whose set defaults to dom(gamma)
  std::vector<TermPtr> children;
};

// Constructors.
TermPtr nil();
TermPtr deadlock();
TermPtr act(std::string name, std::vector<std::string> args = {});
TermPtr shadow(std::string base);
TermPtr var(std::string name, std::string scope = {});
TermPtr seq(TermPtr head, TermPtr tail);
TermPtr alt(std::vector<TermPtr> branches);
TermPtr par(TermPtr left, TermPtr right);
TermPtr whole_par(TermPtr left, TermPtr right);
TermPtr sum(std::string binder, std::string domain, TermPtr body);
TermPtr hide(NameSet names, TermPtr body, std::string set_ref = {});
TermPtr encaps(NameSet names, TermPtr body, std::string set_ref = {},
               bool default_set = false);
TermPtr conflict_elim(TermPtr body);

/// Structural equality, including set references.
bool equal(const TermPtr& a, const TermPtr& b);

/// Compact structural key; equal keys iff equal terms.  Also serves as the
/// total order used to sort alternatives.
std::string key(const TermPtr& t);

/// Guarded equation system `X_i = T_i`; the first equation is the entry.
struct RecursiveSpec {
  std::string name;
  std::vector<std::pair<std::string, TermPtr>> equations;

  const std::string& entry() const;
  const TermPtr* find(const std::string& var) const;
  bool operator==(const RecursiveSpec& o) const;
};

/// One γ entry.  `result` is the printed result name; it defaults to the
/// sorted participant form `c(a,b)`.
struct CommEntry {
  std::string left;
  std::string right;
  std::string result;

  bool operator==(const CommEntry&) const = default;
};

struct CommTable {
  std::vector<CommEntry> entries;

  /// Result name for the unordered pair, or nullptr.
  const CommEntry* lookup(const std::string& a, const std::string& b) const;
  /// Every action name appearing in some entry (the default encapsulation set).
  NameSet domain() const;
  /// Names that `a` communicates with.
  NameSet partners(const std::string& a) const;
  bool operator==(const CommTable&) const = default;
};

struct ConflictRelation {
  std::vector<std::pair<std::string, std::string>> pairs;

  bool conflicts(const std::string& a, const std::string& b) const;
  bool operator==(const ConflictRelation&) const = default;
};

struct Violation {
  enum class Kind {
    UnboundVariable,
    UnknownDomain,
    UnknownConstant,
    DuplicateComm,
    SelfComm,
    ReboundBinder,
    ReservedName,
    BadDomain,
  };
  Kind kind;
  std::string subject;
  std::string message;
};

/// Collects every well-formedness violation; an empty result means valid.
std::vector<Violation> validate_spec(const RecursiveSpec& spec,
                                     const std::vector<DataDomain>& domains,
                                     const CommTable& comms);
std::vector<Violation> validate_domains(const std::vector<DataDomain>& domains);
std::vector<Violation> validate_comms(const CommTable& comms);

struct GuardednessResult {
  bool guarded = true;
  std::vector<std::string> offenders;
};

/// Syntactic guardedness: every variable occurrence must sit behind an
/// action, shadow or deadlock prefix.
GuardednessResult guardedness_check(const RecursiveSpec& spec);

/// Expands every `sum v in D . body` into the alternatives body[v:=c] for
/// the constants c of D, in domain order.  Throws on an unknown domain.
TermPtr elaborate_sums(const TermPtr& term,
                       const std::vector<DataDomain>& domains);
RecursiveSpec elaborate_sums(const RecursiveSpec& spec,
                             const std::vector<DataDomain>& domains);

struct Alphabet {
  std::set<ActionLabel> actions;
  NameSet shadow_bases;
};

/// Ground action labels of the elaborated equations (tau and delta excluded),
/// with shadows reported by base name.
Alphabet alphabet(const RecursiveSpec& spec,
                  const std::vector<DataDomain>& domains);

/// Names of actions and shadows mentioned anywhere in `t`.
void collect_names(const TermPtr& t, NameSet& actions, NameSet& shadows);

inline constexpr const char* kTau = "tau";
inline constexpr const char* kDelta = "delta";

}  // namespace aptc

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

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "aptc/model.hpp"

namespace aptc {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      message_(message) {}

ResolveError::ResolveError(std::string identifier, const std::string& message)
    : Error(message), identifier_(std::move(identifier)) {}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "\xE2\x89\xAC") {  // U+226C BETWEEN
      out.push_back({Tok::Punct, "<>", tl, tc});
      advance(3);
      continue;
    }
    static const char* two[] = {"||", "<>", "->", "<="};
    bool matched = false;
    for (const char* p : two) {
      if (src.substr(i, 2) == p) {
        out.push_back({Tok::Punct, p, tl, tc});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("{}(),=.+@#~[];").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::set<std::string> kTermKeywords = {"sum", "in", "hide", "block",
                                             "theta", "delta"};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Model parse() {
    Model m;
    if (peek().kind == Tok::End) fail("expected top-level declaration");
    while (peek().kind != Tok::End) declaration(m);
    return m;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + ", found " + found);
  }
  bool is(std::string_view punct) const {
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  bool is_word(std::string_view w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  bool accept(std::string_view punct) {
    if (!is(punct)) return false;
    next();
    return true;
  }
  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'");
    next();
  }
  std::string ident(const char* what = "identifier") {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  void declaration(Model& m) {
    if (peek().kind != Tok::Ident) fail("expected top-level declaration");
    const std::string kw = peek().text;
    if (kw == "domain") {
      next();
      DataDomain d;
      d.name = ident("domain name");
      expect("=");
      expect("{");
      if (!is("}")) {
        do d.values.push_back(ident("data constant"));
        while (accept(","));
      }
      expect("}");
      m.domains.push_back(std::move(d));
    } else if (kw == "process" || kw == "spec") {
      next();
      RecursiveSpec s;
      s.name = ident("process name");
      expect("{");
      while (!is("}")) {
        std::string lhs = ident("equation variable or '}'");
        expect("=");
        s.equations.emplace_back(lhs, term());
      }
      expect("}");
      (kw == "process" ? m.processes : m.specs).push_back(std::move(s));
    } else if (kw == "comm") {
      next();
      CommEntry e;
      e.left = ident("action name");
      expect(",");
      e.right = ident("action name");
      e.result = accept("->") ? set_element()
                              : CommResultLabel::of({e.left, e.right}).str();
      m.comms.entries.push_back(std::move(e));
    } else if (kw == "conflict") {
      next();
      std::string a = ident("action name");
      expect("#");
      std::string b = ident("action name");
      m.conflicts.pairs.emplace_back(std::move(a), std::move(b));
    } else if (kw == "set") {
      next();
      NamedSet s;
      s.name = ident("set name");
      expect("=");
      s.names = name_set();
      m.action_sets.push_back(std::move(s));
    } else if (kw == "wso") {
      next();
      Participant p;
      p.role = Participant::Role::Wso;
      p.process = ident("process name");
      if (is_word("internal")) {
        next();
        p.internal = name_set();
      }
      if (is_word("claims")) {
        next();
        p.claimed = term();
      }
      m.participants.push_back(std::move(p));
    } else if (kw == "ws") {
      next();
      Participant p;
      p.role = Participant::Role::Ws;
      p.process = ident("process name");
      if (is_word("serves")) {
        next();
        p.serves = ident("orchestration name");
      }
      if (accept("{")) {
        if (!is("}")) {
          do {
            std::string from = ident("action name");
            expect("->");
            p.mapping.emplace_back(from, ident("operation name"));
          } while (accept(","));
        }
        expect("}");
      }
      m.participants.push_back(std::move(p));
    } else if (kw == "contract") {
      next();
      Contract c;
      c.name = ident("contract name");
      expect_word("protocol");
      c.protocol = ident("spec name");
      expect("{");
      while (!is("}")) {
        ContractPair cp;
        cp.symbol = ident("contract symbol or '}'");
        expect("=");
        cp.left = ident("action name");
        expect("~");
        cp.right = ident("action name");
        c.pairs.push_back(std::move(cp));
      }
      expect("}");
      m.contracts.push_back(std::move(c));
    } else if (kw == "system") {
      next();
      NamedSystem s;
      s.name = ident("system name");
      expect("=");
      s.term = term();
      m.systems.push_back(std::move(s));
    } else if (kw == "composition") {
      next();
      CompositionDecl c;
      c.name = ident("composition name");
      expect_word("hide");
      c.hide_set = ident("set name");
      if (is_word("block")) {
        next();
        c.block_set = ident("set name");
      }
      if (is_word("contract")) {
        next();
        c.contract = ident("contract name");
      }
      m.compositions.push_back(std::move(c));
    } else if (kw == "check") {
      next();
      CheckGoal g;
      g.left = operand();
      g.relation = relation();
      g.right = operand();
      if (accept("[")) {
        if (!is("]")) {
          do override_entry(g.overrides);
          while (accept(","));
        }
        expect("]");
      }
      m.checks.push_back(std::move(g));
    } else {
      fail("expected top-level declaration");
    }
  }

  Operand operand() {
    Operand o;
    if (is_word("ab") && peek(1).kind == Tok::Punct && peek(1).text == "(") {
      next();
      next();
      o.abstract_of = true;
      o.name = ident("orchestration name");
      expect(")");
    } else {
      o.name = ident("system or process name");
    }
    return o;
  }

  Relation relation() {
    if (accept("~")) {
      const Token& t = peek();
      if (t.kind == Tok::Ident) {
        if (t.text == "s") return next(), Relation::StrongStep;
        if (t.text == "bb") return next(), Relation::Branching;
        if (t.text == "rbb") return next(), Relation::RootedBranching;
      }
      fail("expected relation 's', 'bb' or 'rbb' after '~'");
    }
    if (accept("<=")) {
      if (is_word("wt")) return next(), Relation::WeakTraceInclusion;
      fail("expected 'wt' after '<='");
    }
    fail("expected relation ('~s', '~bb', '~rbb' or '<=wt')");
  }

  void override_entry(ConfigOverrides& o) {
    const Token key_tok = peek();
    std::string k = ident("override key");
    expect("=");
    const Token val_tok = peek();
    auto bad = [](const Token& t, const std::string& msg) {
      return ParseError(t.line, t.col, msg);
    };
    if (k == "max_states") {
      if (val_tok.kind != Tok::Number) fail("expected a number");
      std::size_t n = 0;
      std::from_chars(val_tok.text.data(),
                      val_tok.text.data() + val_tok.text.size(), n);
      if (n == 0) throw bad(val_tok, "max_states must be positive");
      next();
      o.max_states = n;
      return;
    }
    std::string w = ident("override value");
    bool ok = true;
    if (k == "comm") {
      o.comm_policy = parse_comm_policy(w);
      ok = o.comm_policy.has_value();
    } else if (k == "step") {
      o.step_mode = parse_step_mode(w);
      ok = o.step_mode.has_value();
    } else if (k == "round") {
      o.round_mode = parse_round_mode(w);
      ok = o.round_mode.has_value();
    } else if (k == "shadow") {
      o.shadow_policy = parse_shadow_policy(w);
      ok = o.shadow_policy.has_value();
    } else if (k == "prune") {
      ok = w == "on" || w == "off";
      o.prune_dead = w == "on";
    } else {
      throw bad(key_tok, "unknown override key '" + k + "'");
    }
    if (!ok) throw bad(val_tok, "unknown value '" + w + "' for '" + k + "'");
  }

  // Name, @Name, Name(arg, ...) or c(p, q, ...).
  std::string set_element() {
    if (accept("@")) return "@" + ident("shadowed action name");
    std::string n = ident("action name");
    if (!accept("(")) return n;
    std::vector<std::string> args;
    do args.push_back(ident("argument"));
    while (accept(","));
    expect(")");
    if (n == "c" && args.size() >= 2) return CommResultLabel::of(args).str();
    return ActionLabel{n, args}.str();
  }

  NameSet name_set() {
    NameSet s;
    expect("{");
    if (!is("}")) {
      do s.insert(set_element());
      while (accept(","));
    }
    expect("}");
    return s;
  }

  // Either `{...}` (inline) or the name of a declared set.
  TermPtr set_operator(bool is_hide) {
    NameSet names;
    std::string ref;
    if (is("{"))
      names = name_set();
    else
      ref = ident("set name or '{'");
    expect_word("in");
    TermPtr body = term();
    return is_hide ? hide(std::move(names), body, ref)
                   : encaps(std::move(names), body, ref);
  }

  TermPtr term() {
    std::vector<TermPtr> branches{par_term()};
    while (accept("+")) branches.push_back(par_term());
    return branches.size() == 1 ? branches.front() : alt(std::move(branches));
  }

  TermPtr par_term() {
    TermPtr left = seq_term();
    while (true) {
      if (accept("||"))
        left = par(left, seq_term());
      else if (accept("<>"))
        left = whole_par(left, seq_term());
      else
        return left;
    }
  }

  TermPtr seq_term() {
    TermPtr head = primary();
    if (accept(".")) return seq(head, seq_term());
    return head;
  }

  TermPtr primary() {
    if (accept("(")) {
      TermPtr t = term();
      expect(")");
      return t;
    }
    if (accept("@")) return shadow(ident("shadowed action name"));
    if (peek().kind != Tok::Ident) fail("expected term");
    const std::string w = peek().text;
    if (w == "delta") return next(), deadlock();
    if (w == "theta") return next(), conflict_elim(term());
    if (w == "hide") return next(), set_operator(true);
    if (w == "block") return next(), set_operator(false);
    if (w == "sum") {
      next();
      std::string binder = ident("binder");
      expect_word("in");
      std::string domain = ident("domain name");
      expect(".");
      return sum(binder, domain, term());
    }
    if (kTermKeywords.count(w)) fail("expected term");
    next();
    std::vector<std::string> args;
    if (accept("(")) {
      do args.push_back(ident("data argument"));
      while (accept(","));
      expect(")");
    }
    return act(w, std::move(args));
  }
};

// Resolution: bare identifiers become variables or process references, set
// references are looked up.
class Resolver {
 public:
  explicit Resolver(Model& m) : m_(m) {}

  void run() {
    std::set<std::string> names;
    for (const auto* list : {&m_.processes, &m_.specs})
      for (const auto& p : *list)
        if (!names.insert(p.name).second)
          throw ResolveError(p.name, "process '" + p.name + "' declared twice");
    dom_ = m_.comms.domain();

    for (auto* list : {&m_.processes, &m_.specs})
      for (auto& p : *list) {
        std::set<std::string> vars;
        for (const auto& [lhs, rhs] : p.equations) vars.insert(lhs);
        for (auto& [lhs, rhs] : p.equations) rhs = local(rhs, p.name, vars);
      }
    for (auto& s : m_.systems) s.term = global(s.term);

    for (auto& p : m_.participants) {
      if (!m_.find_process(p.process))
        throw ResolveError(p.process, "unknown process '" + p.process + "'");
      if (p.claimed) p.claimed = local(p.claimed, "", {});
    }
    for (auto& p : m_.participants) {
      if (p.role != Participant::Role::Ws || p.serves.empty()) continue;
      const auto* w = m_.find_participant(p.serves);
      if (!w || w->role != Participant::Role::Wso)
        throw ResolveError(p.serves,
                           "'" + p.serves + "' is not a declared orchestration");
    }
    for (const auto& c : m_.contracts)
      if (!m_.find_behaviour(c.protocol))
        throw ResolveError(c.protocol, "unknown protocol '" + c.protocol + "'");
    for (const auto& c : m_.compositions) {
      if (!m_.find_set(c.hide_set))
        throw ResolveError(c.hide_set, "unknown set '" + c.hide_set + "'");
      if (!c.block_set.empty() && !m_.find_set(c.block_set))
        throw ResolveError(c.block_set, "unknown set '" + c.block_set + "'");
      if (!c.contract.empty() && !m_.find_contract(c.contract))
        throw ResolveError(c.contract, "unknown contract '" + c.contract + "'");
    }
    for (const auto& g : m_.checks)
      for (const Operand* o : {&g.left, &g.right}) {
        if (o->abstract_of) {
          const auto* w = m_.find_participant(o->name);
          if (!w || w->role != Participant::Role::Wso)
            throw ResolveError(o->name,
                               "'" + o->name + "' is not a declared orchestration");
        } else if (!m_.find_system(o->name) && !m_.find_behaviour(o->name)) {
          throw ResolveError(o->name, "unknown system or process '" + o->name + "'");
        }
      }
  }

 private:
  Model& m_;
  NameSet dom_;

  TermPtr with_set(const TermPtr& t, TermPtr body) {
    Term copy = *t;
    copy.children = {std::move(body)};
    if (!t->set_ref.empty()) {
      if (const auto* s = m_.find_set(t->set_ref)) {
        copy.names = s->names;
        copy.default_set = false;
      } else if (t->kind == TermKind::Encaps && t->set_ref == "H") {
        copy.names = dom_;
        copy.default_set = true;
      } else {
        throw ResolveError(t->set_ref, "unknown set '" + t->set_ref + "'");
      }
    }
    return std::make_shared<const Term>(std::move(copy));
  }

  template <class Leaf>
  TermPtr rebuild(const TermPtr& t, Leaf&& leaf) {
    switch (t->kind) {
      case TermKind::Act: return leaf(t);
      case TermKind::Hide:
      case TermKind::Encaps: return with_set(t, rebuild(t->children[0], leaf));
      default: {
        if (t->children.empty()) return t;
        Term copy = *t;
        for (auto& c : copy.children) c = rebuild(c, leaf);
        return std::make_shared<const Term>(std::move(copy));
      }
    }
  }

  TermPtr local(const TermPtr& t, const std::string& scope,
                const std::set<std::string>& vars) {
    return rebuild(t, [&](const TermPtr& a) {
      if (a->action.args.empty() && vars.count(a->action.name))
        return var(a->action.name, scope);
      return a;
    });
  }

  TermPtr global(const TermPtr& t) {
    return rebuild(t, [&](const TermPtr& a) {
      const auto* p = a->action.args.empty() ? m_.find_behaviour(a->action.name) : nullptr;
      if (!p)
        throw ResolveError(a->action.name, "unknown process '" + a->action.str() + "' in system");
      return var(p->entry(), p->name);
    });
  }
};

}  // namespace

Model parse_model(std::string_view text) {
  Model m = Parser(text).parse();
  Resolver(m).run();
  return m;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "': file not found");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

}  // namespace aptc

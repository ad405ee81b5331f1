// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "aptc/composition.hpp"
#include "aptc/equivalence.hpp"
#include "aptc/semantics.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "random_models.hpp"

using namespace aptc;

namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

Config with_round(RoundMode r) {
  Config c;
  c.round_mode = r;
  return c;
}

int count_prefix(const Counterexample& cx, const std::string& prefix, bool stop_at_b4) {
  int n = 0;
  std::vector<Step> all = cx.trace;
  all.push_back(cx.distinguishing);
  for (const auto& s : all)
    for (const auto& l : s) {
      if (stop_at_b4 && l.rfind("B4", 0) == 0) return n;
      n += l.rfind(prefix, 0) == 0;
    }
  return n;
}

void ab_a() {
  const Model& m = test::example();
  AbDef ab = derive_ab(wso_def(m, "WSOA"), m, {});
  StepLTS loop = test::lts_of("process P { X = A2 . A5 . X }", "P");
  require(branching_bisim(ab.behavior, loop, false).holds, "ABA not branching-bisimilar to A2.A5 loop");
  require(oracle::branching_bisimilar(ab.behavior, loop), "reference checker disagrees");
  require(ab.presentation_text() == "ABA = A2 . A5 . ABA\n", "presentation " + ab.presentation_text());
}

void ab_b() {
  const Model& m = test::example();
  AbDef ab = derive_ab(wso_def(m, "WSOB"), m, {});
  StepLTS loop = test::lts_of("process P { X = B2 . B3 . X }", "P");
  require(branching_bisim(ab.behavior, loop, false).holds, "ABB not branching-bisimilar to B2.B3 loop");
  require(oracle::branching_bisimilar(ab.behavior, loop), "reference checker disagrees");
  require(ab.claim_note && ab.claim_note->find("B2 . B4") != std::string::npos,
          "printed claim B2.B4 not flagged");
}

void external_behaviour() {
  const Model& m = test::example();
  StepLTS sys = prune_dead(test::lts_of(m, "Sys"));
  StepLTS spec = test::lts_of(m, "SPEC");
  require(branching_bisim(sys, spec, false).holds, "system not branching-bisimilar to SPEC");
  require(oracle::branching_bisimilar(sys, spec), "reference checker disagrees");
  StepLTS q = minimize(sys, Reduction::Branching);
  require(q.num_states() == 2 && q.transitions().size() == 4,
          "minimized LTS has " + std::to_string(q.num_states()) + " states, " +
              std::to_string(q.transitions().size()) + " transitions");
}

void mode_sensitivity() {
  const Model& m = test::example();
  StepLTS spec = test::lts_of(m, "SPEC");
  std::string first;
  for (int run = 0; run < 2; ++run) {
    Verdict ov = branching_bisim(prune_dead(test::lts_of(m, "Sys", with_round(RoundMode::Overlap))), spec, false);
    require(!ov.holds && ov.counterexample, "overlap mode unexpectedly holds");
    require(count_prefix(*ov.counterexample, "A1", true) >= 2, "overlap counterexample lacks two A1 before B4");
    Config bin;
    bin.comm_policy = CommPolicy::Binary;
    Verdict bv = branching_bisim(prune_dead(test::lts_of(m, "Sys", bin)), spec, false);
    require(!bv.holds && bv.counterexample, "binary policy unexpectedly holds");
    std::string key = ov.counterexample->reason + bv.counterexample->reason;
    for (const auto& s : ov.counterexample->trace) key += step_str(s);
    for (const auto& s : bv.counterexample->trace) key += step_str(s);
    if (run == 0) first = key;
    require(key == first, "counterexamples differ between runs");
  }
}

void counters() {
  const Model& m = test::example();
  StepLTS barrier = test::lts_of(m, "Sys");
  StepLTS ov = test::lts_of(m, "Sys", with_round(RoundMode::Overlap));
  require(counter_monitor(barrier, {"A1"}, {"B4"}, 0, 1).holds, "barrier [0,1] violated");
  require(counter_monitor(ov, {"A1"}, {"B4"}, 0, 2).holds, "overlap [0,2] violated");
  Verdict v = counter_monitor(ov, {"A1"}, {"B4"}, 0, 1);
  require(!v.holds, "overlap [0,1] unexpectedly holds");
  require(oracle::counter_range(barrier, "A1", "B4", 40) == std::pair<long, long>{0, 1},
          "reference range for barrier");
  require(oracle::counter_range(ov, "A1", "B4", 40) == std::pair<long, long>{0, 2},
          "reference range for overlap");
}

void correspondence() {
  const Model& m = test::example();
  AbDef a = derive_ab(wso_def(m, "WSOA"), m, {});
  AbDef b = derive_ab(wso_def(m, "WSOB"), m, {});
  require(correspondence_check(a, ws_def(m, "WSA"), {{"A2", "WA2"}, {"A5", "WA5"}}, m, {}).holds,
          "ABA/WSA");
  require(correspondence_check(b, ws_def(m, "WSB"), {{"B2", "WB2"}, {"B3", "WB3"}}, m, {}).holds,
          "ABB/WSB");
}

void conformance() {
  const Model& m = test::example();
  CompositionModel c = composition_model(m, "Example");
  require(wsc_conformance(c, m, {}).holds, "contract fails under barrier+chained");
  CompositionModel rev = c;
  std::swap(rev.contract->pairs[0].symbol, rev.contract->pairs[1].symbol);
  Verdict v = wsc_conformance(rev, m, {});
  require(!v.holds && v.counterexample, "reversed contract holds");
}

void properties() {
  constexpr unsigned kCases = 1000;
  for (unsigned seed = 0; seed < kCases; ++seed) {
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    test::ModelGen gen(seed + 70000);
    const std::string text = gen.model();
    Model m = parse_model(text);
    require(parse_model(render_model(m)) == m, tag + "round trip");
    TermPtr s = m.find_system("S")->term;
    auto probe = [&](TermPtr t, const Config& c = {}) {
      Model x = m;
      x.systems.push_back({"Probe", std::move(t)});
      return test::lts_of(x, "Probe", c);
    };
    StepLTS l = test::lts_of(m, "S");
    const NameSet I = {"a", "c(a,b)"};
    require(test::edges(probe(hide(I, s))) == test::edges(probe(hide(I, hide(I, s)))), tag + "hide idempotence");
    require(test::edges(probe(encaps({}, s))) == test::edges(l), tag + "empty block");
    require(test::edges(probe(hide({}, s))) == test::edges(l), tag + "empty hide");

    StepLTS other = test::lts_of(parse_model(test::ModelGen(seed + 71000).model()), "S");
    for (const StepLTS* r : {&l, &other}) {
      if (strong_step_bisim(l, *r).holds)
        require(branching_bisim(l, *r, false).holds && branching_bisim(l, *r, true).holds,
                tag + "strong not within branching");
    }
    StepLTS q = minimize(l, Reduction::Branching);
    require(branching_bisim(l, q, false).holds, tag + "minimize changes verdict");
    require(test::edges(minimize(q, Reduction::Branching)) == test::edges(q), tag + "minimize idempotence");

    // Interleave/step agreement on a hide-free model.
    test::GenOptions plain;
    plain.hiding = false;
    Model hf = parse_model(test::ModelGen(seed + 72000, plain).model());
    Config inter;
    inter.step_mode = StepMode::Interleave;
    Semantics si(hf, inter), ss(hf, Config{});
    TermPtr hs = hf.find_system("S")->term;
    std::vector<SystemState> work{si.initial_state(hs)};
    ss.initial_state(hs);
    std::set<std::string> seen{work.front().key()};
    while (!work.empty()) {
      SystemState st = work.back();
      work.pop_back();
      std::set<std::pair<Step, std::string>> a, b;
      for (auto& n : si.enabled_steps(st)) {
        a.emplace(n.step, n.next.key());
        if (seen.insert(n.next.key()).second) work.push_back(n.next);
      }
      for (auto& n : ss.enabled_steps(st))
        if (n.step.size() == 1) b.emplace(n.step, n.next.key());
      require(a == b, tag + "interleave/step disagreement");
    }

    const std::string act = gen.action();
    Model ax = parse_model("process P { X = " + act + " . w }\nprocess Q { Y = @" + act +
                           " }\nsystem S = P <> Q");
    require(test::edges(test::lts_of(ax, "S")) == test::edges(test::lts_of(ax, "P")), tag + "shadow axiom");

    Model xx = parse_model("process P { X = X }");
    require(!guardedness_check(*xx.find_process("P")).guarded, tag + "X = X accepted");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"AB derivation A: ab(WSOA) ~bb A2.A5 loop", ab_a},
      {"AB derivation B: ab(WSOB) ~bb B2.B3 loop, printed B2.B4 flagged", ab_b},
      {"external behaviour: system ~bb SPEC after prune_dead; quotient 2 states / 4 transitions", external_behaviour},
      {"mode sensitivity: overlap and binary fail deterministically", mode_sensitivity},
      {"causal counter: barrier [0,1], overlap [0,2], overlap violates [0,1]", counters},
      {"correspondence: ABA~WSA and ABB~WSB under the operation mappings", correspondence},
      {"WSC conformance: contract holds, reversed contract fails", conformance},
      {"property suites over 1000 random models", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("PASS criterion %zu: %s\n", i + 1, criteria[i].first);
    } else {
      ++failed;
      std::printf("FAIL criterion %zu: %s (%s)\n", i + 1, criteria[i].first, why.c_str());
    }
  }
  return failed ? 1 : 0;
}

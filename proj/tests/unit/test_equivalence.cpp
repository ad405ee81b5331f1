#include <doctest.h>

#include "aptc/equivalence.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace aptc;

namespace {

StepLTS hidden_wsoa() {
  Model m = test::example();
  m.systems.push_back({"H", hide({"A1", "A3", "A4", "A6"}, var("WSOA", "WSOA"))});
  return test::lts_of(m, "H");
}

StepLTS loop(const std::string& text) { return test::lts_of(text, "P"); }

Config overlap() {
  Config c;
  c.round_mode = RoundMode::Overlap;
  return c;
}

bool two_a1_before_b4(const std::vector<Step>& trace, const Step& last) {
  int a1 = 0;
  std::vector<Step> all = trace;
  all.push_back(last);
  for (const auto& s : all)
    for (const auto& l : s) {
      if (l.rfind("B4", 0) == 0) return false;
      if (l.rfind("A1", 0) == 0 && ++a1 == 2) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("strong step bisimulation") {
  StepLTS sys = test::lts_of(test::example(), "Sys");
  CHECK(strong_step_bisim(sys, sys).holds);

  auto v = strong_step_bisim(loop("process P { X = A2 . X }"), loop("process P { X = A5 . X }"));
  CHECK_FALSE(v.holds);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->distinguishing == Step{"A2"});
  CHECK_FALSE(v.witness);

  StepLTS fused = test::lts_of("process P { X = a }\nprocess Q { Y = @a }\nsystem S = P <> Q", "S");
  CHECK(strong_step_bisim(fused, loop("process P { X = a }")).holds);
}

TEST_CASE("branching bisimulation on the hidden orchestration") {
  StepLTS h = hidden_wsoa();
  StepLTS spec = loop("process P { X = A2 . A5 . X }");
  auto v = branching_bisim(h, spec, false);
  CHECK(v.holds);
  CHECK(v.witness);
  CHECK_FALSE(v.counterexample);
  CHECK(oracle::branching_bisimilar(h, spec));

  auto r = branching_bisim(h, spec, true);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->distinguishing.empty());

  CHECK(branching_bisim(h, minimize(h, Reduction::Branching), false).holds);
}

TEST_CASE("minimize") {
  StepLTS m = minimize(hidden_wsoa(), Reduction::Branching);
  CHECK(m.num_states() == 2);
  CHECK(test::edges(m) == "0 {A2} 1\n1 {A5} 0\n");
  CHECK(test::edges(minimize(m, Reduction::Branching)) == test::edges(m));

  StepLTS spin;
  spin.add_state();
  spin.add_transition(0, Step{}, 0);
  spin.seal();
  StepLTS q = minimize(spin, Reduction::Branching);
  CHECK(q.num_states() == 1);
  CHECK(q.transitions().empty());
}

TEST_CASE("weak trace inclusion") {
  const Model& m = test::example();
  StepLTS spec = test::lts_of(m, "SPEC");
  StepLTS sys = minimize(prune_dead(test::lts_of(m, "Sys")), Reduction::Branching);
  CHECK(weak_trace_inclusion(sys, spec).holds);
  CHECK(weak_trace_inclusion(spec, sys).holds);

  StepLTS ov = test::lts_of(m, "Sys", overlap());
  auto v = weak_trace_inclusion(ov, spec);
  CHECK_FALSE(v.holds);
  REQUIRE(v.counterexample);
  CHECK(two_a1_before_b4(v.counterexample->trace, v.counterexample->distinguishing));

  StepLTS empty;
  empty.add_state();
  empty.seal();
  CHECK(weak_trace_inclusion(empty, spec).holds);
}

TEST_CASE("deadlocks and divergences") {
  const Model& m = test::example();
  CHECK(deadlocks(test::lts_of(m, "Sys")).empty());
  Config binary;
  binary.comm_policy = CommPolicy::Binary;
  Model open = m;
  open.systems.push_back({"Open", m.find_system("Sys")->term->children[0]});
  CHECK_FALSE(deadlocks(test::lts_of(open, "Open", binary)).empty());

  StepLTS div = test::lts_of("process P { X = hide {A2} in (A2 . X) }", "P");
  CHECK(divergences(div).size() == 1);
}

TEST_CASE("counter monitor") {
  const Model& m = test::example();
  StepLTS barrier = test::lts_of(m, "Sys");
  StepLTS ov = test::lts_of(m, "Sys", overlap());
  CHECK(counter_monitor(barrier, {"A1"}, {"B4"}, 0, 1).holds);
  CHECK(counter_monitor(ov, {"A1"}, {"B4"}, 0, 2).holds);
  auto v = counter_monitor(ov, {"A1"}, {"B4"}, 0, 1);
  CHECK_FALSE(v.holds);
  REQUIRE(v.counterexample);
  CHECK(two_a1_before_b4(v.counterexample->trace, v.counterexample->distinguishing));

  // Independent bound check by bounded path enumeration.
  CHECK(oracle::counter_range(barrier, "A1", "B4", 40) == std::pair<long, long>{0, 1});
  CHECK(oracle::counter_range(ov, "A1", "B4", 40) == std::pair<long, long>{0, 2});
}

TEST_CASE("counterexamples replay") {
  const Model& m = test::example();
  StepLTS spec = test::lts_of(m, "SPEC");
  StepLTS ov = prune_dead(test::lts_of(m, "Sys", overlap()));
  auto v = branching_bisim(ov, spec, false);
  REQUIRE(v.counterexample);
  const auto& cx = *v.counterexample;
  CHECK(replay(ov, cx.trace, cx.left_state, true));
  CHECK(replay(spec, cx.trace, cx.right_state, true));
  CHECK(two_a1_before_b4(cx.trace, cx.distinguishing));

  StepLTS a = loop("process P { X = A2 . A2 . X }");
  StepLTS b = loop("process P { X = A2 . A5 . X }");
  auto s = strong_step_bisim(a, b);
  REQUIRE(s.counterexample);
  CHECK(replay(a, s.counterexample->trace, s.counterexample->left_state, false));
  CHECK(replay(b, s.counterexample->trace, s.counterexample->right_state, false));
}

TEST_CASE("verdicts are deterministic") {
  const Model& m = test::example();
  StepLTS spec = test::lts_of(m, "SPEC");
  auto run = [&] {
    return branching_bisim(prune_dead(test::lts_of(m, "Sys", overlap())), spec, false);
  };
  auto a = run(), b = run();
  REQUIRE(a.counterexample);
  REQUIRE(b.counterexample);
  CHECK(a.counterexample->trace == b.counterexample->trace);
  CHECK(a.counterexample->reason == b.counterexample->reason);
}

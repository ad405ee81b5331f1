#include <doctest.h>

#include <deque>
#include <set>

#include "aptc/semantics.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace aptc;

namespace {

// The example model plus an unhidden copy of the composed system.
Model example_with_unhidden() {
  Model m = test::example();
  m.systems.push_back({"Open", m.find_system("Sys")->term->children[0]});
  return m;
}

std::set<Step> initial_steps(const Model& m, const std::string& sys, const Config& c = {}) {
  Semantics sem(m, c);
  std::set<Step> out;
  for (const auto& s : sem.enabled_steps(sem.initial_state(system_term(m, sys))))
    out.insert(s.step);
  return out;
}

StepLTS hand(std::size_t n, std::vector<std::tuple<std::size_t, Step, std::size_t>> edges) {
  StepLTS l;
  for (std::size_t i = 0; i < n; ++i) l.add_state();
  for (auto& [f, s, t] : edges) l.add_transition(f, s, t);
  l.seal();
  return l;
}

const char* kRelay = R"(
process PA { X = A2 . X }
process WA { X = WA2 . X }
process WB { X = WB2 . X }
process PB { X = B2 . X }
comm A2, WA2
comm B2, WB2
comm WA2, WB2
system S = block H in (PA <> WA <> WB <> PB)
)";

}  // namespace

TEST_CASE("initial steps of the example system") {
  Model m = example_with_unhidden();
  std::set<Step> expect = {{"A1(d1)"}, {"A1(d2)"}, {"B1"}, {"A1(d1)", "B1"}, {"A1(d2)", "B1"}};
  CHECK(initial_steps(m, "Open") == expect);
}

TEST_CASE("chained relay fuses into one event") {
  Model m = parse_model(kRelay);
  CHECK(initial_steps(m, "S") == std::set<Step>{{"c(A2,B2,WA2,WB2)"}});
  Config binary;
  binary.comm_policy = CommPolicy::Binary;
  CHECK(initial_steps(m, "S", binary) ==
        std::set<Step>{{"c(A2,WA2)", "c(B2,WB2)"}, {"c(WA2,WB2)"}, {"c(A2,WA2)"}, {"c(B2,WB2)"}});
}

TEST_CASE("deadlock and blocked partners") {
  Model d = parse_model("process P { X = delta }\nsystem S = P <> P");
  CHECK(initial_steps(d, "S").empty());

  Model w = parse_model("process W { X = WA2 . X }\ncomm A2, WA2\nsystem S = block H in W");
  CHECK(initial_steps(w, "S").empty());
  StepLTS l = test::lts_of(w, "S");
  CHECK(l.num_states() == 1);
  CHECK(l.transitions().empty());
  CHECK(l.is_deadlock(0));
}

TEST_CASE("WSOA alone in interleave mode") {
  Config c;
  c.step_mode = StepMode::Interleave;
  StepLTS l = test::lts_of(test::example(), "WSOA", c);
  // 0 WSOA, 1 WSOA1, 2 WSOA2, 3 (A4||A5).W3, 4 (A3.A4).W3, 5 A4.W3, 6 A5.W3, 7 WSOA3
  StepLTS expect = hand(8, {{0, {"A1(d1)"}, 1},
                            {0, {"A1(d2)"}, 1},
                            {1, {"A2"}, 2},
                            {2, {"A3"}, 3},
                            {2, {"A5"}, 4},
                            {3, {"A4"}, 6},
                            {3, {"A5"}, 5},
                            {4, {"A3"}, 5},
                            {5, {"A4"}, 7},
                            {6, {"A5"}, 7},
                            {7, {"A6"}, 0}});
  CHECK(l.num_states() == 8);
  CHECK(l.transitions().size() == 11);
  CHECK(oracle::strong_bisimilar(l, expect));

  Model h = test::example();
  h.systems.push_back({"H", hide({"A1", "A3", "A4", "A6"}, var("WSOA", "WSOA"))});
  StepLTS hidden = test::lts_of(h, "H", c);
  CHECK(hidden.num_states() == 8);
  std::size_t taus = 0;
  for (const auto& t : hidden.transitions()) taus += t.label == 0;
  CHECK(taus == 6);  // both hidden A1 branches collapse into one tau edge
}

TEST_CASE("single action loop") {
  StepLTS l = test::lts_of("process P { X = A2 . X }", "P");
  CHECK(l.num_states() == 1);
  CHECK(test::edges(l) == "0 {A2} 0\n");
}

TEST_CASE("prune_dead") {
  StepLTS l = hand(3, {{0, {"a"}, 1}, {1, {"b"}, 0}, {0, {"c"}, 2}});
  StepLTS p = prune_dead(l);
  CHECK(p.num_states() == 2);
  CHECK(test::edges(p) == "0 {a} 1\n1 {b} 0\n");

  StepLTS live = hand(2, {{0, {"a"}, 1}, {1, {"b"}, 0}});
  CHECK(test::edges(prune_dead(live)) == test::edges(live));

  StepLTS sink = hand(2, {{0, {"a"}, 1}});
  StepLTS ps = prune_dead(sink);
  CHECK(ps.num_states() == 1);
  CHECK(ps.initial_dead);
}

TEST_CASE("binary policy: relay fusion between the services starves") {
  Model m = example_with_unhidden();
  Config c;
  c.comm_policy = CommPolicy::Binary;
  StepLTS full = test::lts_of(m, "Open", c);
  StepLTS pruned = prune_dead(full);
  auto mentions = [](const StepLTS& l, const std::string& label) {
    for (const auto& t : l.transitions())
      for (const auto& x : l.label(t.label))
        if (x == label) return true;
    return false;
  };
  CHECK(mentions(full, "c(WA2,WB2)"));
  CHECK_FALSE(mentions(pruned, "c(WA2,WB2)"));
  CHECK(pruned.num_states() < full.num_states());
}

TEST_CASE("apply_theta") {
  std::vector<Step> steps = {{"A2"}, {"A5"}};
  CHECK(apply_theta(steps, ConflictRelation{}) == steps);
  CHECK(apply_theta(steps, ConflictRelation{{{"A2", "A5"}}}) == std::vector<Step>{{"A2"}});
  CHECK(apply_theta(steps, ConflictRelation{{{"A5", "A2"}}}) == std::vector<Step>{{"A2"}});
}

TEST_CASE("theta in a model prunes the larger conflict participant") {
  StepLTS l = test::lts_of("process P { X = A2 . X + A5 . X }\nconflict A2 # A5\nsystem S = theta P", "S");
  CHECK(test::edges(l) == "0 {A2} 0\n");
}

TEST_CASE("shadow axiom") {
  StepLTS fused = test::lts_of("process P { X = a }\nprocess Q { Y = @a }\nsystem S = P <> Q", "S");
  StepLTS plain = test::lts_of("process P { X = a }", "P");
  CHECK(test::edges(fused) == test::edges(plain));
  CHECK(test::edges(fused) == "0 {a} 1\n");
  // A standalone shadow never fires.
  CHECK(test::lts_of("process Q { Y = @a }", "Q").transitions().empty());
}

TEST_CASE("strict and loose shadow policy") {
  const char* text = "process P { X = a . X }\nprocess Q { Y = @a . b . Y }\nsystem S = P <> Q";
  StepLTS strict = test::lts_of(text, "S");
  Config loose;
  loose.shadow_policy = ShadowPolicy::Loose;
  StepLTS l = test::lts_of(text, "S", loose);
  CHECK(l.transitions().size() > strict.transitions().size());
}

TEST_CASE("barrier rounds stay within one") {
  Model m = example_with_unhidden();
  Semantics sem(m, Config{});
  std::deque<SystemState> work{sem.initial_state(system_term(m, "Sys"))};
  std::set<std::string> seen{work.front().key()};
  std::size_t states = 0;
  while (!work.empty()) {
    SystemState s = work.front();
    work.pop_front();
    ++states;
    REQUIRE(!s.rounds.empty());
    auto [lo, hi] = std::minmax_element(s.rounds.begin(), s.rounds.end());
    CHECK(*lo == 0);
    CHECK(*hi - *lo <= 1);
    for (auto& n : sem.enabled_steps(s))
      if (seen.insert(n.next.key()).second) work.push_back(n.next);
  }
  CHECK(states == test::lts_of(m, "Sys").num_states());
}

TEST_CASE("budget and unguarded recursion") {
  Config tight;
  tight.max_states = 3;
  try {
    test::lts_of(test::example(), "Sys", tight);
    FAIL("expected budget error");
  } catch (const BudgetExceeded& e) {
    CHECK(e.max_states() == 3);
    CHECK(e.frontier() > 0);
  }
  CHECK_THROWS_AS(test::lts_of("process P { X = X }", "P"), UnguardedRecursion);
}

TEST_CASE("generation is deterministic") {
  Config c;
  c.round_mode = RoundMode::Overlap;
  StepLTS a = test::lts_of(test::example(), "Sys", c);
  StepLTS b = test::lts_of(test::example(), "Sys", c);
  CHECK(test::edges(a) == test::edges(b));
  for (std::size_t s = 0; s < a.num_states(); ++s) CHECK(a.state_key(s) == b.state_key(s));
}

TEST_CASE("hiding and encapsulation on the example system") {
  const Model& m = test::example();
  StepLTS l = test::lts_of(m, "Sys");
  const NameSet& I = m.find_set("I")->names;
  const NameSet H = m.comms.domain();
  for (const auto& t : l.transitions())
    for (const auto& x : l.label(t.label)) {
      CHECK(I.count(x) == 0);
      CHECK(H.count(x) == 0);
    }
  Model twice = m;
  twice.systems.push_back({"Twice", hide(I, m.find_system("Sys")->term)});
  CHECK(test::edges(test::lts_of(twice, "Twice")) == test::edges(l));
}

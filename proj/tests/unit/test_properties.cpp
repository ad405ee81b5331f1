#include <doctest.h>

#include <set>

#include "aptc/equivalence.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "random_models.hpp"

using namespace aptc;

namespace {

constexpr int kCases = 1000;

Model random_model(unsigned seed, test::GenOptions o = {}) {
  test::ModelGen gen(seed, o);
  return parse_model(gen.model());
}

StepLTS with_system(Model m, TermPtr t, const Config& c = {}) {
  m.systems.push_back({"Probe", std::move(t)});
  return test::lts_of(m, "Probe", c);
}

TermPtr sys(const Model& m) { return m.find_system("S")->term; }

}  // namespace

TEST_CASE("hiding is idempotent") {
  for (unsigned seed = 0; seed < kCases; ++seed) {
    Model m = random_model(seed);
    NameSet I = {"a", "c(a,b)"};
    StepLTS once = with_system(m, hide(I, sys(m)));
    StepLTS twice = with_system(m, hide(I, hide(I, sys(m))));
    REQUIRE_MESSAGE(test::edges(once) == test::edges(twice), "seed " << seed);
  }
}

TEST_CASE("empty block and empty hide are identities") {
  for (unsigned seed = 0; seed < kCases; ++seed) {
    Model m = random_model(seed + 10000);
    const std::string plain = test::edges(test::lts_of(m, "S"));
    REQUIRE_MESSAGE(test::edges(with_system(m, encaps({}, sys(m)))) == plain, "seed " << seed);
    REQUIRE_MESSAGE(test::edges(with_system(m, hide({}, sys(m)))) == plain, "seed " << seed);
  }
}

TEST_CASE("interleave steps are the singleton steps") {
  test::GenOptions o;
  o.hiding = false;
  Config inter, step;
  inter.step_mode = StepMode::Interleave;
  for (unsigned seed = 0; seed < kCases; ++seed) {
    Model m = random_model(seed + 20000, o);
    Semantics si(m, inter), ss(m, step);
    SystemState init = si.initial_state(sys(m));
    ss.initial_state(sys(m));
    std::vector<SystemState> work{init};
    std::set<std::string> seen{init.key()};
    while (!work.empty()) {
      SystemState s = work.back();
      work.pop_back();
      std::set<std::pair<Step, std::string>> a, b;
      for (auto& n : si.enabled_steps(s)) {
        a.emplace(n.step, n.next.key());
        if (seen.insert(n.next.key()).second) work.push_back(n.next);
      }
      for (auto& n : ss.enabled_steps(s))
        if (n.step.size() == 1) b.emplace(n.step, n.next.key());
      REQUIRE_MESSAGE(a == b, "seed " << seed << " state " << s.key());
    }
  }
}

TEST_CASE("strong implies branching; both agree with the reference") {
  int strong_pairs = 0;
  for (unsigned seed = 0; seed < kCases; ++seed) {
    Model m = random_model(seed + 30000);
    StepLTS l = test::lts_of(m, "S");
    // Pair with another model, and with a copy whose system is duplicated
    // under a choice (strongly bisimilar by construction).
    StepLTS other = test::lts_of(random_model(seed + 31000), "S");
    StepLTS dup = with_system(m, alt({sys(m), sys(m)}));
    for (const StepLTS* r : {&other, &dup}) {
      Verdict s = strong_step_bisim(l, *r);
      Verdict b = branching_bisim(l, *r, false);
      Verdict rb = branching_bisim(l, *r, true);
      REQUIRE_MESSAGE(s.holds == oracle::strong_bisimilar(l, *r), "seed " << seed);
      REQUIRE_MESSAGE(b.holds == oracle::branching_bisimilar(l, *r), "seed " << seed);
      if (s.holds) {
        ++strong_pairs;
        REQUIRE_MESSAGE(b.holds, "seed " << seed);
        REQUIRE_MESSAGE(rb.holds, "seed " << seed);
      }
      if (rb.holds) REQUIRE(b.holds);
      REQUIRE(s.witness.has_value() != s.counterexample.has_value());
      REQUIRE(b.witness.has_value() != b.counterexample.has_value());
      // Symmetry.
      REQUIRE(strong_step_bisim(*r, l).holds == s.holds);
      REQUIRE(branching_bisim(*r, l, false).holds == b.holds);
    }
    REQUIRE(strong_step_bisim(l, l).holds);
    REQUIRE(branching_bisim(l, l, true).holds);
  }
  CHECK(strong_pairs >= kCases);
}

TEST_CASE("counterexamples replay on random pairs") {
  int failures = 0;
  for (unsigned seed = 0; seed < kCases; ++seed) {
    StepLTS l = test::lts_of(random_model(seed + 40000), "S");
    StepLTS r = test::lts_of(random_model(seed + 41000), "S");
    for (bool branching : {false, true}) {
      Verdict v = branching ? branching_bisim(l, r, false) : strong_step_bisim(l, r);
      if (v.holds) continue;
      ++failures;
      const auto& cx = *v.counterexample;
      REQUIRE_MESSAGE(replay(l, cx.trace, cx.left_state, branching), "seed " << seed);
      REQUIRE_MESSAGE(replay(r, cx.trace, cx.right_state, branching), "seed " << seed);
    }
  }
  CHECK(failures > kCases / 2);
}

TEST_CASE("minimize is idempotent and verdict-preserving") {
  for (unsigned seed = 0; seed < kCases; ++seed) {
    StepLTS l = test::lts_of(random_model(seed + 50000), "S");
    StepLTS q = minimize(l, Reduction::Branching);
    REQUIRE_MESSAGE(branching_bisim(l, q, false).holds, "seed " << seed);
    REQUIRE(test::edges(minimize(q, Reduction::Branching)) == test::edges(q));
    REQUIRE(q.num_states() == oracle::branching_classes(q));
    StepLTS s = minimize(l, Reduction::Strong);
    REQUIRE(strong_step_bisim(l, s).holds);
    REQUIRE(test::edges(minimize(s, Reduction::Strong)) == test::edges(s));
  }
}

TEST_CASE("shadow axiom: a <> @a behaves as a") {
  test::ModelGen gen(7);
  for (int i = 0; i < kCases; ++i) {
    const std::string a = gen.action();
    std::string tail;
    for (int k = gen.pick(3); k > 0; --k) tail += " . " + std::string(1, "wxyz"[gen.pick(4)]);
    const std::string args = gen.pick(2) ? "(u)" : "";
    const std::string text = "domain D = { u, v }\nprocess P { X = " + a + args + tail +
                             " }\nprocess Q { Y = @" + a + " }\nsystem S = P <> Q\n";
    StepLTS fused = test::lts_of(text, "S");
    StepLTS plain = test::lts_of(text, "P");
    REQUIRE_MESSAGE(test::edges(fused) == test::edges(plain), text);
    REQUIRE(fused.num_states() == plain.num_states());
  }
}

TEST_CASE("guardedness rejects self reference") {
  test::ModelGen gen(11);
  for (int i = 0; i < kCases; ++i) {
    const std::string v = "X" + std::to_string(i);
    std::string body = v;
    if (gen.pick(2)) body = gen.action() + " . " + v + " + " + v;
    Model m = parse_model("process P { " + v + " = " + body + " }");
    auto g = guardedness_check(*m.find_process("P"));
    REQUIRE_FALSE(g.guarded);
    REQUIRE(g.offenders == std::vector<std::string>{v});
  }
}

TEST_CASE("DSL round trip") {
  for (unsigned seed = 0; seed < kCases; ++seed) {
    test::ModelGen gen(seed + 60000);
    const std::string text = gen.model();
    Model m = parse_model(text);
    const std::string r = render_model(m);
    REQUIRE_MESSAGE(parse_model(r) == m, text << "\n--- rendered ---\n" << r);
    REQUIRE(render_model(parse_model(r)) == r);
  }
}

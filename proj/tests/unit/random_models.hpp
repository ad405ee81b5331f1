// Random small models for the property suites.  Recursion only appears as
// the tail of an action-prefixed branch, so every generated model is
// guarded and finite-state.

#pragma once

#include <random>
#include <string>
#include <vector>

namespace test {

struct GenOptions {
  bool hiding = true;   // allow hide/block wrappers
  bool shadows = true;  // allow @a prefixes
  bool data = true;     // allow sums over a domain
};

class ModelGen {
 public:
  explicit ModelGen(unsigned seed, GenOptions o = {}) : rng_(seed), opt_(o) {}

  /// A model text with processes P and Q, a few comm entries and a system S.
  std::string model() {
    std::string out = "domain D = { u, v }\n";
    for (const char* p : {"P", "Q"}) out += process(p);
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}};
    for (const auto& [x, y] : pairs)
      if (pick(3) == 0) out += "comm " + x + ", " + y + "\n";
    if (pick(4) == 0) out += "conflict a # c\n";
    std::string sys = "P <> Q";
    if (opt_.hiding && pick(3) == 0) sys = "block {" + action() + "} in (" + sys + ")";
    if (opt_.hiding && pick(3) == 0) sys = "hide {" + action() + "} in (" + sys + ")";
    if (pick(4) == 0) sys = "theta (" + sys + ")";
    out += "system S = " + sys + "\n";
    return out;
  }

  std::string action() { return std::string(1, "abcd"[pick(4)]); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  std::string process(const std::string& name) {
    const int eqs = 1 + pick(2);
    std::vector<std::string> vars;
    for (int i = 0; i < eqs; ++i) vars.push_back(name + std::to_string(i));
    std::string out = "process " + name + " {\n";
    for (int i = 0; i < eqs; ++i) {
      std::string body;
      const int branches = 1 + pick(2);
      for (int b = 0; b < branches; ++b) {
        if (b) body += " + ";
        std::string branch = prefix() + " . " + flat(2);
        if (pick(4) != 0) branch += " . " + vars[pick(eqs)];
        body += branch;
      }
      out += "  " + vars[i] + " = " + body + "\n";
    }
    return out + "}\n";
  }

  // An action-headed guard.
  std::string prefix() {
    if (opt_.shadows && pick(5) == 0) return "@" + action();
    if (opt_.data && pick(5) == 0) return "sum x in D . " + action() + "(x)";
    return action();
  }

  // A variable-free term.
  std::string flat(int depth) {
    if (depth == 0) return pick(8) == 0 ? "delta" : action();
    switch (pick(7)) {
      case 0:
        return "(" + flat(depth - 1) + " . " + flat(depth - 1) + ")";
      case 1:
        return "(" + flat(depth - 1) + " + " + flat(depth - 1) + ")";
      case 2:
        return "(" + flat(depth - 1) + " || " + flat(depth - 1) + ")";
      case 3:
        return "(" + flat(depth - 1) + " <> " + flat(depth - 1) + ")";
      case 4:
        if (opt_.hiding) return "(hide {" + action() + "} in " + flat(depth - 1) + ")";
        return action();
      case 5:
        if (opt_.shadows) return "(@" + action() + " . " + flat(depth - 1) + ")";
        return action();
      default:
        return action();
    }
  }

  std::mt19937 rng_;
  GenOptions opt_;
};

}  // namespace test

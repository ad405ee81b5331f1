#pragma once

#include <string>

#include "aptc/model.hpp"
#include "aptc/semantics.hpp"

namespace test {

inline std::string example_path() { return std::string(APTC_MODELS) + "/paper_example.aptc"; }

inline const aptc::Model& example() {
  static const aptc::Model m = aptc::load_model_file(example_path());
  return m;
}

inline aptc::StepLTS lts_of(const aptc::Model& m, const std::string& name,
                            const aptc::Config& c = {}) {
  return aptc::generate_lts(aptc::system_term(m, name), m, c);
}

inline aptc::StepLTS lts_of(const std::string& text, const std::string& name,
                            const aptc::Config& c = {}) {
  const aptc::Model m = aptc::parse_model(text);
  return lts_of(m, name, c);
}

// Edge list "from -label-> to" sorted, for exact comparisons.
inline std::string edges(const aptc::StepLTS& l) {
  std::string out;
  for (const auto& t : l.transitions())
    out += std::to_string(t.from) + " " + aptc::step_str(l.label(t.label)) + " " +
           std::to_string(t.to) + "\n";
  return out;
}

}  // namespace test

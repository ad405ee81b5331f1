// Python bindings for the aptc core.  Structured results cross the boundary
// as JSON text; the package's __init__ decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aptc/composition.hpp"
#include "aptc/report.hpp"
#include "aptc/semantics.hpp"

namespace py = pybind11;
using namespace aptc;

namespace {

ConfigOverrides overrides(const py::dict& kw) {
  ConfigOverrides o;
  auto word = [&](const char* k) { return py::str(kw[k]).cast<std::string>(); };
  auto need = [](auto v, const std::string& w, const char* k) {
    if (!v) throw Error("invalid value '" + w + "' for " + k);
    return *v;
  };
  for (auto item : kw) {
    const std::string k = py::str(item.first);
    if (k == "comm_policy")
      o.comm_policy = need(parse_comm_policy(word("comm_policy")), word("comm_policy"), "comm_policy");
    else if (k == "step_mode")
      o.step_mode = need(parse_step_mode(word("step_mode")), word("step_mode"), "step_mode");
    else if (k == "round_mode")
      o.round_mode = need(parse_round_mode(word("round_mode")), word("round_mode"), "round_mode");
    else if (k == "shadow_policy")
      o.shadow_policy =
          need(parse_shadow_policy(word("shadow_policy")), word("shadow_policy"), "shadow_policy");
    else if (k == "max_states")
      o.max_states = item.second.cast<std::size_t>();
    else
      throw Error("unknown option '" + k + "'");
  }
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "aptc core bindings";

  static py::exception<Error> error(m, "AptcError");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Model>(m, "Model")
      .def_static("parse", &parse_model, py::arg("text"))
      .def_static("load", &load_model_file, py::arg("path"))
      .def("render", &render_model)
      .def("__eq__", [](const Model& a, const Model& b) { return a == b; })
      .def_property_readonly("processes",
                             [](const Model& md) {
                               std::vector<std::string> out;
                               for (const auto& p : md.processes) out.push_back(p.name);
                               return out;
                             })
      .def_property_readonly("systems",
                             [](const Model& md) {
                               std::vector<std::string> out;
                               for (const auto& s : md.systems) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("checks", [](const Model& md) {
        std::vector<std::string> out;
        for (const auto& c : md.checks) out.push_back(c.label());
        return out;
      });

  m.def(
      "check_json",
      [](const Model& md, bool rooted, const py::kwargs& kw) {
        return report_json(run_checks(md, RunOptions{overrides(kw), rooted}));
      },
      py::arg("model"), py::arg("rooted") = false);

  m.def(
      "lts_json",
      [](const Model& md, const std::string& system, bool minimize_lts, bool prune,
         const py::kwargs& kw) {
        StepLTS l = generate_lts(system_term(md, system), md, overrides(kw).apply(Config{}));
        if (prune) l = prune_dead(l);
        if (minimize_lts) l = minimize(l, Reduction::Branching);
        return to_json(l);
      },
      py::arg("model"), py::arg("system"), py::arg("minimize") = false,
      py::arg("prune_dead") = false);

  m.def(
      "derive_ab_json",
      [](const Model& md, const std::string& wso, const py::kwargs& kw) {
        return ab_json(derive_ab(wso_def(md, wso), md, overrides(kw).apply(Config{})));
      },
      py::arg("model"), py::arg("wso"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "maxent/detector.hpp"
#include "maxent/errors.hpp"
#include "maxent/oracle.hpp"
#include "maxent/report.hpp"
#include "maxent/state.hpp"

namespace py = pybind11;

namespace {

maxent::ParameterKind parse_mode(const std::string& mode) {
  if (mode == "real") return maxent::ParameterKind::kReal;
  if (mode == "magnitude") return maxent::ParameterKind::kMagnitude;
  throw maxent::ModeError("mode must be 'real' or 'magnitude'");
}

std::vector<std::string> sequence_strings(const maxent::BipartiteState& state) {
  const auto seq = maxent::state_subdiscriminants(state);
  std::vector<std::string> out;
  for (const auto& v : seq.values()) out.push_back(maxent::report::describe(v.with_var(state.param_name())));
  return out;
}

std::vector<std::string> big_strings(const std::vector<maxent::BigRational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact maximal-entanglement test for pure bipartite states";

  auto base = py::register_exception<maxent::Error>(m, "Error");
  py::register_exception<maxent::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<maxent::ModeError>(m, "ModeError", base.ptr());
  py::register_exception<maxent::MagnitudeModeError>(m, "MagnitudeModeError", base.ptr());
  py::register_exception<maxent::DomainError>(m, "DomainError", base.ptr());

  py::class_<maxent::BipartiteState>(m, "BipartiteState")
      .def_property_readonly("dim_a", &maxent::BipartiteState::dim_a)
      .def_property_readonly("dim_b", &maxent::BipartiteState::dim_b)
      .def_property_readonly("parametric", &maxent::BipartiteState::is_parametric)
      .def_property_readonly("parameter", &maxent::BipartiteState::param_name)
      .def_property_readonly("kind", [](const maxent::BipartiteState& s) { return maxent::to_string(s.kind()); })
      .def("specialize",
           [](const maxent::BipartiteState& s, const std::string& value) {
             return s.specialize(maxent::BigRational::parse(value));
           },
           py::arg("value"), "Substitute an exact rational (given as text) for the parameter.")
      .def("__repr__", [](const maxent::BipartiteState& s) {
        return "<BipartiteState " + std::to_string(s.dim_a()) + "x" + std::to_string(s.dim_b()) +
               " kind=" + maxent::to_string(s.kind()) + ">";
      });

  py::class_<maxent::Verdict>(m, "Verdict")
      .def_readonly("maximal", &maxent::Verdict::maximal)
      .def_readonly("d_used", &maxent::Verdict::d_used)
      .def_readonly("degeneracy", &maxent::Verdict::degeneracy)
      .def_readonly("notes", &maxent::Verdict::notes)
      .def_property_readonly("kept", [](const maxent::Verdict& v) { return maxent::to_string(v.kept); })
      .def_property_readonly("d_last_but_one",
                             [](const maxent::Verdict& v) { return v.d_last_but_one.to_string(); })
      .def_property_readonly("sequence", [](const maxent::Verdict& v) { return big_strings(v.sequence); })
      .def("__repr__", [](const maxent::Verdict& v) {
        return std::string("<Verdict maximal=") + (v.maximal ? "True" : "False") +
               " D=" + v.d_last_but_one.to_string() + ">";
      });

  m.def("parse_state", [](const std::string& text) { return maxent::parse_state(text); }, py::arg("text"),
        "Parse the line-oriented state format.");
  m.def("is_maximally_entangled", &maxent::is_maximally_entangled, py::arg("state"));
  m.def("subdiscriminant_sequence", &sequence_strings, py::arg("state"),
        "D_1..D_d as text; parametric members in primitive integer form.");
  m.def("_parametric_json",
        [](const maxent::BipartiteState& s, const std::string& mode) {
          return maxent::report::parametric_result(maxent::parametric_analysis(s, parse_mode(mode))).dump();
        },
        py::arg("state"), py::arg("mode"));
  m.def("_sequence_json",
        [](const maxent::BipartiteState& s) {
          return maxent::report::sequence_result(s, maxent::state_subdiscriminants(s)).dump();
        },
        py::arg("state"));
  m.def("_oracle_json",
        [](const maxent::BipartiteState& s) {
          return maxent::report::oracle_result(maxent::oracle::schmidt_spectrum(s), std::nullopt).dump();
        },
        py::arg("state"));
}

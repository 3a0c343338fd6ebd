#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlts/run.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification and cohomology for Hom-Lie triple systems "
            "and weighted O-operators";

  py::register_exception<hlts::error>(m, "InputError", PyExc_ValueError);

  py::class_<hlts::Workspace>(m, "Workspace")
      .def(py::init<>())
      .def_static("from_json", &hlts::parse_workspace, py::arg("text"),
                  "Parse a workspace JSON document.")
      .def("to_json", &hlts::print_workspace)
      .def("__eq__", [](const hlts::Workspace& a, const hlts::Workspace& b) { return a == b; });

  m.def(
      "run",
      [](const std::vector<std::string>& args, const hlts::Workspace& ws) {
        hlts::Report r = hlts::run_command(args, ws);
        return py::make_tuple(r.exit_code, r.machine, r.text);
      },
      py::arg("args"), py::arg("workspace"),
      "Run one CLI command against a workspace; returns (exit_code, machine_json, text).");

  m.def("complete_skew", &hlts::lint_complete_skew, py::arg("workspace"),
        "Fill bracket entries forced by skew symmetry or a cyclic orbit.");
}

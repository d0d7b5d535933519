#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfkit/algebra.hpp"
#include "hopfkit/cli.hpp"
#include "hopfkit/error.hpp"

namespace py = pybind11;
using namespace hopfkit;

namespace
{

RunConfig config_at(int order)
{
  RunConfig c;
  c.order = order;
  return c;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Exact verification of Hopf algebra presentations";

  py::register_exception<Error>(m, "HopfkitError", PyExc_ValueError);

  py::class_<Check>(m, "Check")
      .def_readonly("id", &Check::id)
      .def_readonly("passed", &Check::pass)
      .def_readonly("witness", &Check::witness)
      .def_readonly("order", &Check::order)
      .def_readonly("detail", &Check::detail)
      .def("__repr__", [](const Check &c) { return "<Check " + c.id + (c.pass ? " pass>" : " fail>"); });

  py::class_<Report>(m, "Report")
      .def_readonly("subject", &Report::subject)
      .def_readonly("checks", &Report::checks)
      .def_readonly("annotations", &Report::annotations)
      .def_property_readonly("passed", &Report::pass)
      .def("failing_ids", &Report::failing_ids)
      .def("__repr__", [](const Report &r) { return "<Report " + r.subject + (r.pass() ? " pass>" : " fail>"); });

  m.def("default_order", &default_order, "Truncation order used when none is given.");
  m.def("builtin_names", &builtin_names, "Names of the built-in presentations.");
  m.def("scaling_names", &builtin_scaling_names, "Names of the built-in scaling maps.");

  m.def(
      "run",
      [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_command(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command-line invocation; returns (exit code, stdout, stderr).");

  m.def(
      "normal_form",
      [](const std::string &presentation, const std::string &expr, int order) {
        py::gil_scoped_release release;
        const Algebra a(resolve_presentation(presentation), config_at(order).engine());
        const Value v = a.evaluate(expr);
        if (const auto *t = std::get_if<Tensor>(&v))
          return a.render(a.nf(*t));
        return a.render(a.nf(as_element(v, a.truncation())));
      },
      py::arg("presentation"), py::arg("expression"), py::arg("order") = 3);

  m.def(
      "verify",
      [](const std::string &presentation, std::optional<std::vector<std::string>> checks, int order) {
        py::gil_scoped_release release;
        const Presentation p = resolve_presentation(presentation);
        return run_verify(p, checks ? *checks : default_checks(p), config_at(order));
      },
      py::arg("presentation"), py::arg("checks") = py::none(), py::arg("order") = 3);
}

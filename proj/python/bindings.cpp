#include "tautcalc/commands.hpp"
#include "tautcalc/expression.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace tautcalc;

namespace {

py::tuple run_command(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

std::string report(const CommandOutput& c) { return c.report.dump(2); }

}  // namespace

PYBIND11_MODULE(_tautcalc, m)
{
    m.doc() = "Exact calculus for tautological classes on Jacobians";
    m.attr("__version__") = TAUTCALC_VERSION;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normalize", [](const std::string& text) { return parse_element(text).to_string(); }, py::arg("expression"),
          "Parse an expression and print its canonical form.");
    m.def("d_op",
          [](const std::string& text, int times) {
              TautElement x = parse_element(text);
              for (int k = 0; k < times; ++k) x = op_D(x);
              return x.to_string();
          },
          py::arg("expression"), py::arg("times") = 1, "Apply D the given number of times.");
    m.def("run", &run_command, py::arg("args"), "Run a command line; returns (exit_code, stdout, stderr).");
    m.def("check_w",
          [](int genus, std::optional<int> max_codim) {
              CommandOutput c = check_w_command(genus, max_codim);
              return py::make_tuple(c.report["status"].get<std::string>(), report(c));
          },
          py::arg("genus"), py::arg("max_codim") = py::none(), "Returns (status, JSON report).");
    m.def("degeneration_check",
          [](int genus) {
              CommandOutput c = degeneration_check_command(genus);
              return py::make_tuple(c.exit_code == kExitPass, report(c));
          },
          py::arg("genus") = 4, "Returns (passed, JSON report).");
    m.def("pullback_verify",
          [] {
              CommandOutput c = pullback_verify_command();
              return py::make_tuple(c.exit_code == kExitPass, report(c));
          },
          "Returns (passed, JSON report).");
}

#include "cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qdist;

namespace {

cli::Problem problem_from(const std::string& text, std::optional<int> bits, bool exact) {
    cli::Problem p;
    try {
        p = cli::parse_problem(cli::json::parse(text));
    } catch (const cli::json::exception& e) {
        throw cli::ParseError(e.what());
    }
    if (bits) p.bits = *bits;
    p.exact = p.exact || exact;
    return p;
}

using Command = cli::json (*)(const cli::Problem&);

std::string call(Command f, const std::string& text, std::optional<int> bits, bool exact) {
    const cli::Problem p = problem_from(text, bits, exact);
    py::gil_scoped_release release;
    return f(p).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact distances between quadrics";

    static py::exception<Degeneracy> degenerate(m, "DegenerateError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Degeneracy& e) {
            PyErr_SetObject(degenerate.ptr(), py::make_tuple(e.reason(), e.what()).ptr());
        } catch (const cli::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "distance", [](const std::string& problem, std::optional<int> bits,
                       bool exact) { return call(cli::distance_json, problem, bits, exact); },
        py::arg("problem"), py::arg("bits") = py::none(), py::arg("exact") = false,
        "Distance report for a JSON problem, as JSON text.");
    m.def(
        "intersect", [](const std::string& problem) { return call(cli::intersect_json, problem, {}, false); },
        py::arg("problem"));
    m.def(
        "polynomial", [](const std::string& problem) { return call(cli::poly_json, problem, {}, false); },
        py::arg("problem"));
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int status = cli::run(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in process: (status, stdout, stderr).");
}

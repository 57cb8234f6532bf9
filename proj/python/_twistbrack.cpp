// Python bindings: sessions and commands, with results returned as JSON text.
#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistbrack/commands.hpp"
#include "twistbrack/error.hpp"

namespace py = pybind11;
using namespace twistbrack;

namespace {

std::string dump(const ResultDocument& doc) { return doc.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_twistbrack, m) {
  m.doc() = "Gerstenhaber brackets on Hochschild cochains of S(V) x| G over F_p";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  py::class_<Session>(m, "Session")
      .def_static("load", [](const std::string& path) { return Session::load(path); }, py::arg("path"))
      .def_static("parse", [](const std::string& text) { return Session::parse(text); }, py::arg("text"))
      .def("to_json", [](const Session& s) { return s.to_json().dump(); })
      .def_property_readonly("p", [](const Session& s) { return s.context().field().characteristic(); })
      .def_property_readonly("group_order", [](const Session& s) { return s.context().algebra().group().size(); })
      .def_property_readonly("variables", [](const Session& s) { return s.context().algebra().variable_names(); })
      .def_property_readonly("cochain_names", [](const Session& s) {
        std::vector<std::string> names;
        for (const auto& [name, spec] : s.cochains()) names.push_back(name);
        return names;
      });

  m.def("check", [](const Session& s, const std::string& name) { return dump(cmd_check(s, name)); },
        py::arg("session"), py::arg("name"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "bracket",
      [](const Session& s, const std::string& left, const std::string& right,
         const std::optional<std::string>& compare) { return dump(cmd_bracket(s, left, right, compare)); },
      py::arg("session"), py::arg("left"), py::arg("right"), py::arg("class_compare_with") = py::none(),
      py::call_guard<py::gil_scoped_release>());
  m.def("demo_transvection", [](std::int64_t p) { return dump(cmd_demo_transvection(p)); }, py::arg("p"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "selfcheck",
      [](const Session& s, int hdeg, int ideg, int trials, std::uint64_t seed) {
        return dump(cmd_selfcheck(s, {hdeg, ideg, trials, seed}));
      },
      py::arg("session"), py::arg("hdeg") = 3, py::arg("ideg") = 3, py::arg("trials") = 50, py::arg("seed") = 1,
      py::call_guard<py::gil_scoped_release>());
}

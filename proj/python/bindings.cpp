#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strongcommon/certify.hpp"
#include "strongcommon/cli.hpp"
#include "strongcommon/document.hpp"
#include "strongcommon/error.hpp"

namespace py = pybind11;
using namespace strongcommon;

namespace {

py::object to_fraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  auto big = [](const Integer& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
  };
  return fraction(big(value.get_num()), big(value.get_den()));
}

py::list to_fractions(const Polynomial& poly) {
  py::list out;
  for (const auto& c : poly.coeffs()) out.append(to_fraction(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_strongcommon, m) {
  m.doc() = "Exact U_p densities, deficits and certificates";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> list;
             for (const auto& [u, v] : edges) list.push_back({u, v});
             return Graph(n, std::move(list));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); }, py::arg("text"));
  m.def("canonical_form", [](const Graph& g) { return canonical_form(g); }, py::arg("graph"));
  m.def("hom_density_up", [](const Graph& g) { return to_fractions(hom_density_up(g)); }, py::arg("graph"),
        "Ascending coefficients of t_H(U_p).");
  m.def("delta", [](const Graph& g) { return to_fractions(delta(g).delta); }, py::arg("graph"),
        "Ascending coefficients of t_H(U_p) - (p - 1)^e.");
  m.def("deficit", [](const Graph& g) { return to_fractions(deficit(g).total); }, py::arg("graph"),
        "Ascending coefficients of the deficit sum over even spanning subgraphs.");
  m.def(
      "certify_document",
      [](const Graph& g) {
        const auto cert = certify_not_strongly_common(g);
        const auto lemmas = verify_lemma_suite(g);
        return certificate_document(cert, &lemmas).dump();
      },
      py::arg("graph"));
  m.def(
      "verify_document",
      [](const std::string& text) {
        const auto check = verify_certificate_document(Json::parse(text));
        return py::make_tuple(check.valid, check.certified, check.detail);
      },
      py::arg("text"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command line; returns (exit_code, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "torus/errors.hpp"
#include "torus/invariant.hpp"
#include "torus/io.hpp"
#include "torus/oracle.hpp"

namespace py = pybind11;
using namespace torus;

namespace {

struct NonPolynomialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

py::list term_list(const algebra::LaurentPolynomial& p) {
  py::list out;
  for (const auto& [m, c] : p.terms()) {
    py::list row;
    for (std::size_t v = 0; v < m.size(); ++v) row.append(m[v]);
    const py::object value = c.get_den() == 1 ? py::int_(py::str(c.get_num().get_str()))
                                              : py::module_::import("fractions").attr("Fraction")(c.get_str());
    row.append(value);
    out.append(py::tuple(row));
  }
  return out;
}

invariant::Specialization parse_target(const std::string& name) {
  if (name == "homfly") return invariant::Specialization::homfly;
  if (name == "jones") return invariant::Specialization::jones;
  if (name == "alexander") return invariant::Specialization::alexander;
  throw UsageError("unknown specialization '" + name + "', expected homfly, jones or alexander");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact beta-deformed torus knot invariants";
  m.attr("__version__") = TORUS_VERSION;

  py::register_exception<NonPolynomialError>(m, "NonPolynomialError", PyExc_ArithmeticError);
  py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
  py::register_exception<CalibrationError>(m, "CalibrationError", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<invariant::PropertyFlags>(m, "PropertyFlags")
      .def_readonly("polynomial", &invariant::PropertyFlags::polynomial)
      .def_readonly("integral", &invariant::PropertyFlags::integral)
      .def_readonly("positive", &invariant::PropertyFlags::positive)
      .def_readonly("normalized", &invariant::PropertyFlags::normalized)
      .def("all", &invariant::PropertyFlags::all);

  py::class_<invariant::Superpolynomial>(m, "Superpolynomial")
      .def_readonly("n", &invariant::Superpolynomial::n)
      .def_readonly("m", &invariant::Superpolynomial::m)
      .def_readonly("flags", &invariant::Superpolynomial::flags)
      .def_property_readonly("terms", [](const invariant::Superpolynomial& p) { return term_list(p.terms); },
                             "(a, q, t, coefficient) tuples, ascending")
      .def_property_readonly("content",
                             [](const invariant::Superpolynomial& p) {
                               return py::make_tuple(p.raw_content[0], p.raw_content[1], p.raw_content[2]);
                             })
      .def("to_json", [](const invariant::Superpolynomial& p) { return io::knot_json(p); })
      .def("raw_json", [](const invariant::Superpolynomial& p) { return io::raw_knot_json(p); })
      .def("grouped", [](const invariant::Superpolynomial& p) { return io::grouped_text(p.terms); })
      .def("latex", [](const invariant::Superpolynomial& p) { return io::latex_table(p.terms); })
      .def("__str__", [](const invariant::Superpolynomial& p) { return algebra::to_string(p.terms); })
      .def("__repr__", [](const invariant::Superpolynomial& p) {
        return "<Superpolynomial (" + std::to_string(p.n) + "," + std::to_string(p.m) + ") " +
               std::to_string(p.terms.size()) + " terms>";
      });

  m.def(
      "compute",
      [](int n, int m, unsigned threads) {
        invariant::ComputeResult r;
        {
          py::gil_scoped_release release;
          r = invariant::compute(invariant::KnotRequest::make(n, m), invariant::ComputeOptions{threads});
        }
        if (auto* np = std::get_if<invariant::NonPolynomial>(&r)) throw NonPolynomialError(np->message);
        return std::get<invariant::Superpolynomial>(std::move(r));
      },
      py::arg("n"), py::arg("m"), py::arg("threads") = 1,
      "Normalized invariant of the (n, m) torus knot. Raises NonPolynomialError when gcd(n, m) > 1.");

  m.def(
      "specialize",
      [](const invariant::Superpolynomial& p, const std::string& target) {
        return algebra::to_string(invariant::specialize(p, parse_target(target)));
      },
      py::arg("p"), py::arg("target"), "t = -1 (homfly), then a = q^2 (jones) or a = 1 (alexander).");

  m.def(
      "generating_function_json",
      [](int n, int r, int k_check) {
        py::gil_scoped_release release;
        return io::genfun_json(invariant::generating_function(n, r, k_check));
      },
      py::arg("n"), py::arg("r"), py::arg("k_check") = 3);

  m.def(
      "scan_csv",
      [](int n_max, int m_max, unsigned threads) {
        py::gil_scoped_release release;
        return invariant::to_csv(invariant::scan(n_max, m_max, invariant::ComputeOptions{threads}));
      },
      py::arg("n_max"), py::arg("m_max"), py::arg("threads") = 1);

  m.def(
      "verify_fixture",
      [](const std::string& path) {
        const auto fixture = io::parse_knot_json(io::read_file(path));
        const auto r = invariant::compute(invariant::KnotRequest::make(fixture.n, fixture.m));
        if (const auto* p = std::get_if<invariant::Superpolynomial>(&r)) return io::term_diff(fixture.terms, p->terms);
        return std::string("not polynomial");
      },
      py::arg("path"), "Term diff between a knot fixture and compute(); empty when equal.");

  m.def(
      "verify_oracle",
      [](int max_size) {
        std::vector<std::pair<std::string, bool>> out;
        {
          py::gil_scoped_release release;
          for (auto& c : oracle::run_suites(max_size)) out.emplace_back(std::move(c.name), c.ok);
        }
        return out;
      },
      py::arg("max_size") = 3);
}

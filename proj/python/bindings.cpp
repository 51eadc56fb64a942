#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diffelim/errors.hpp"
#include "diffelim/parser.hpp"
#include "diffelim/report.hpp"

namespace py = pybind11;
using namespace diffelim;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Mode mode_of(const std::string& s) {
  if (s == "generic") return Mode::kGeneric;
  if (s == "concrete") return Mode::kConcrete;
  throw ValidationError("option", "mode expects concrete or generic");
}

PipelineOptions options_of(std::uint64_t seed, const std::vector<int>& distinguished, const std::optional<std::string>& mode,
                           const std::string& ps_order) {
  PipelineOptions o;
  o.seed = seed;
  o.distinguished = distinguished;
  if (mode) o.mode = mode_of(*mode);
  if (ps_order == "ascending") o.ps_order = PsOrder::kAscending;
  else if (ps_order != "descending") throw ValidationError("option", "ps_order expects ascending or descending");
  return o;
}

Json elimination_report(Pipeline& p, int l) {
  const Elimination& e = p.eliminate(l);
  Json j = elimination_json(e);
  j["determinant"] = det_json(e, nullptr);
  return j;
}

}  // namespace

PYBIND11_MODULE(_diffelim, m) {
  m.doc() = "Sparse differential resultants for systems of ordinary differential polynomials";

  auto validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  auto configuration = py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_RuntimeError);
  auto degenerate = py::register_exception<DegenerateConfiguration>(m, "DegenerateConfiguration", PyExc_RuntimeError);
  py::register_exception<VanishedError>(m, "VanishedError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);
  py::register_exception<ParseError>(m, "ParseError", validation.ptr());
  py::register_exception<NotSuperEssential>(m, "NotSuperEssential", configuration.ptr());
  py::register_exception<TightnessRetryExceeded>(m, "TightnessRetryExceeded", degenerate.ptr());

  py::class_<MultiPoly>(m, "Poly")
      .def(py::init([](const std::string& s) { return parse_poly(s); }), py::arg("text"))
      .def("__str__", &MultiPoly::str)
      .def("__repr__", [](const MultiPoly& p) { return "Poly('" + p.str() + "')"; })
      .def("__len__", &MultiPoly::size)
      .def("is_zero", &MultiPoly::is_zero)
      .def("degree", &MultiPoly::degree)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const MultiPoly& p) { return py::hash(py::str(p.str())); });

  m.def("exact_divide", &exact_divide, py::arg("num"), py::arg("den"),
        "Quotient in the Laurent ring, or None when the division is not exact.");
  m.def("divide_polynomial", &divide_polynomial, py::arg("num"), py::arg("den"));

  py::class_<DiffSystem>(m, "System")
      .def(py::init([](const std::string& text) { return parse_system(text); }), py::arg("text"))
      .def_property_readonly("n", &DiffSystem::n)
      .def_readonly("names", &DiffSystem::names)
      .def_property_readonly("generic", [](const DiffSystem& s) { return s.mode == Mode::kGeneric; })
      .def("__str__", &print_system)
      .def("genericize", &genericize)
      .def("order_matrix", [](const DiffSystem& s) { return order_matrix(s).o; })
      .def("jacobi_numbers", [](const DiffSystem& s) { return jacobi_numbers(order_matrix(s)); })
      .def("is_super_essential", [](const DiffSystem& s) { return is_super_essential(s); })
      .def("analysis", [](const DiffSystem& s) { return to_py(analysis_json(s)); });

  py::class_<Pipeline>(m, "Pipeline")
      .def(py::init([](const DiffSystem& s, std::uint64_t seed, const std::vector<int>& distinguished,
                       const std::optional<std::string>& mode, const std::string& ps_order) {
             return Pipeline(s, options_of(seed, distinguished, mode, ps_order));
           }),
           py::arg("system"), py::arg("seed") = 1, py::arg("distinguished") = std::vector<int>{},
           py::arg("mode") = std::nullopt, py::arg("ps_order") = "descending")
      .def_property_readonly("stage", &Pipeline::stage)
      .def_property_readonly("system", &Pipeline::system, py::return_value_policy::copy)
      .def_property_readonly("L", [](Pipeline& p) { return p.ags().L; })
      .def("distinguished", &Pipeline::distinguished)
      .def("extracted", &Pipeline::extracted)
      .def("ps", [](Pipeline& p) { return to_py(ps_json(p.system(), p.ps())); })
      .def("ags", [](Pipeline& p) { return to_py(ags_json(p.ags(), p.xi(), &p.mixed_volumes())); })
      .def("matrix", [](Pipeline& p, int l) { return to_py(to_json(p.matrix(l))); }, py::arg("l"))
      .def("determinant", [](Pipeline& p, int l) { return to_py(det_json(p.determinant(l), nullptr)); }, py::arg("l"))
      .def("eliminate", [](Pipeline& p, int l) { return to_py(elimination_report(p, l)); }, py::arg("l"))
      .def("output", [](Pipeline& p, int l) { return factored_str(p.eliminate(l).output); }, py::arg("l"))
      .def(
          "bounds",
          [](Pipeline& p, int l) {
            const Elimination& e = p.eliminate(l);
            return to_py(bounds_json(p.system(), bounds_report(p.system(), p.ps(), p.ags(), p.mixed_volumes(), e.output, e.tau)));
          },
          py::arg("l"));
}

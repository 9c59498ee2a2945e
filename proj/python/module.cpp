#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "h3sep/errors.hpp"
#include "h3sep/hydrogen.hpp"
#include "h3sep/integrals.hpp"
#include "h3sep/io.hpp"
#include "h3sep/pes_scan.hpp"
#include "h3sep/secular.hpp"
#include "h3sep/wavefunction.hpp"

namespace py = pybind11;
using namespace h3sep;

namespace {

double angle_arg(const py::object& alpha) {
  if (py::isinstance<py::str>(alpha)) return io::parse_angle(alpha.cast<std::string>());
  return alpha.cast<double>();
}

Geometry make_geometry(double r, const py::object& alpha) { return Geometry(r, angle_arg(alpha)); }

py::array_t<double> grid_values(const AngularGrid& g) {
  py::array_t<double> out({g.theta_count, g.phi_count});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < g.theta_count; ++i) {
    for (std::size_t j = 0; j < g.phi_count; ++j) view(i, j) = g.at(i, j);
  }
  return out;
}

py::dict grid_dict(const AngularGrid& g) {
  py::dict d;
  d["r"] = g.r_fixed;
  d["theta"] = py::array_t<double>(g.theta.size(), g.theta.data());
  d["phi"] = py::array_t<double>(g.phi.size(), g.phi.data());
  d["psi"] = grid_values(g);
  return d;
}

}  // namespace

PYBIND11_MODULE(_h3sep, m) {
  m.doc() = "Bound states of the three-proton one-electron ion in a separable potential";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NoBoundState>(m, "NoBoundState", PyExc_RuntimeError);
  py::register_exception<QuadratureFailure>(m, "QuadratureFailure", PyExc_ArithmeticError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);

  py::class_<Geometry>(m, "Geometry")
      .def(py::init(&make_geometry), py::arg("r"), py::arg("alpha"),
           "Isosceles geometry; alpha may be a number or a string such as 'pi/6'")
      .def_property_readonly("r", &Geometry::r)
      .def_property_readonly("alpha", &Geometry::alpha)
      .def_property_readonly("base_length", &Geometry::base_length)
      .def_property_readonly("plus", &Geometry::plus)
      .def_property_readonly("minus", &Geometry::minus)
      .def("__repr__", [](const Geometry& g) {
        return "Geometry(r=" + std::to_string(g.r()) + ", alpha=" + std::to_string(g.alpha()) + ")";
      });

  py::class_<hydrogen::AMatrix2>(m, "AMatrix2")
      .def_readonly("a00", &hydrogen::AMatrix2::a00)
      .def_readonly("a01", &hydrogen::AMatrix2::a01)
      .def_readonly("a10", &hydrogen::AMatrix2::a10)
      .def_readonly("a11", &hydrogen::AMatrix2::a11);

  py::class_<hydrogen::HydrogenRoot>(m, "HydrogenRoot")
      .def_readonly("x", &hydrogen::HydrogenRoot::x)
      .def_readonly("lambda0", &hydrogen::HydrogenRoot::lambda0)
      .def_readonly("lambda1", &hydrogen::HydrogenRoot::lambda1)
      .def_readonly("lambda_ratio", &hydrogen::HydrogenRoot::lambda_ratio)
      .def_readonly("pure_state", &hydrogen::HydrogenRoot::pure_state);

  m.def("a_matrix", &hydrogen::a_matrix, py::arg("x"));
  m.def("secular_det", &hydrogen::secular_det, py::arg("x"));
  m.def("find_hydrogen_roots", &hydrogen::find_hydrogen_roots, py::arg("x_max") = 3.0,
        py::arg("tol") = 1e-10);

  py::class_<IntegralSet>(m, "IntegralSet")
      .def_readonly("x", &IntegralSet::x)
      .def_readonly("i0", &IntegralSet::i0)
      .def_readonly("iplus", &IntegralSet::iplus)
      .def_readonly("i1", &IntegralSet::i1);

  m.def("i0", &i0, py::arg("x"));
  m.def("f_overlap", &f_overlap, py::arg("d"), py::arg("x"));
  m.def("integral_set", &integral_set, py::arg("geom"), py::arg("x"));

  py::enum_<Factor>(m, "Factor")
      .value("Symmetric", Factor::Symmetric)
      .value("Antisymmetric", Factor::Antisymmetric);

  py::class_<SecularRoot>(m, "SecularRoot")
      .def_readonly("x", &SecularRoot::x)
      .def_readonly("epsilon", &SecularRoot::epsilon)
      .def_readonly("factor", &SecularRoot::factor)
      .def_readonly("x_minus_one", &SecularRoot::x_minus_one);

  py::class_<LambdaVector>(m, "LambdaVector")
      .def_readonly("l0", &LambdaVector::l0)
      .def_readonly("lplus", &LambdaVector::lplus)
      .def_readonly("lminus", &LambdaVector::lminus);

  m.def("secular_factors", [](const Geometry& g, double x) {
    const SecularFactors f = secular_factors(g, x);
    return py::make_tuple(f.antisymmetric, f.symmetric);
  }, py::arg("geom"), py::arg("x"), "(antisymmetric, symmetric) factor values");
  m.def("ground_state_root", &ground_state_root, py::arg("geom"), py::arg("tol") = 1e-10);
  m.def("excited_root", &excited_root, py::arg("geom"), py::arg("tol") = 1e-10);
  m.def("lambda_vector", &lambda_vector, py::arg("geom"), py::arg("root"));

  py::class_<PsiParams>(m, "PsiParams")
      .def_readonly("x", &PsiParams::x)
      .def_readonly("mixing", &PsiParams::mixing)
      .def_readonly("norm", &PsiParams::norm);

  m.def("raw_params", &raw_params, py::arg("geom"), py::arg("root"));
  m.def("normalize", &normalize, py::arg("geom"), py::arg("root"));
  m.def("psi", &psi, py::arg("r"), py::arg("theta"), py::arg("phi"), py::arg("params"));
  m.def("psi_grid", [](double r_fixed, const PsiParams& p, std::size_t nt, std::size_t np) {
    return grid_dict(psi_grid(r_fixed, p, nt, np));
  }, py::arg("r_fixed"), py::arg("params"), py::arg("theta_count") = 90,
     py::arg("phi_count") = 180, "dict with theta, phi and a (theta_count, phi_count) psi array");

  py::class_<PesRow>(m, "PesRow")
      .def_readonly("r", &PesRow::r)
      .def_property_readonly("status", [](const PesRow& row) { return std::string(io::status_name(row.status)); })
      .def_readonly("x", &PesRow::x)
      .def_readonly("epsilon", &PesRow::epsilon)
      .def_readonly("e_electronic", &PesRow::e_electronic)
      .def_readonly("v_nn", &PesRow::v_nn)
      .def_readonly("e_total", &PesRow::e_total);

  py::class_<StabilityReport>(m, "StabilityReport")
      .def_readonly("usable_rows", &StabilityReport::usable_rows)
      .def_readonly("monotone_decreasing", &StabilityReport::monotone_decreasing)
      .def_readonly("minimum_r", &StabilityReport::minimum_r)
      .def_readonly("classification", &StabilityReport::classification);

  m.def("nuclear_repulsion", &nuclear_repulsion, py::arg("geom"));
  m.def("scan_r", [](const py::object& alpha, const std::vector<double>& rs, double tol) {
    return scan_r(angle_arg(alpha), rs, tol).rows;
  }, py::arg("alpha"), py::arg("r_values"), py::arg("tol") = 1e-10,
     py::call_guard<py::gil_scoped_release>());
  m.def("comparison_curve", [](const py::object& alpha, double r_min, double r_max, std::size_t n) {
    return comparison_curve(angle_arg(alpha), r_min, r_max, n).rows;
  }, py::arg("alpha"), py::arg("r_min"), py::arg("r_max"), py::arg("n"));
  m.def("stability_report", [](const std::vector<PesRow>& rows) {
    return stability_report(PesTable{0.0, rows});
  }, py::arg("rows"));

  m.def("parse_angle", [](const std::string& s) { return io::parse_angle(s); }, py::arg("text"));
}

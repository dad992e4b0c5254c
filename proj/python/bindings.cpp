#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torusbound/geometry.hpp"
#include "torusbound/spectra.hpp"

namespace py = pybind11;
using namespace torusbound;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature-induced bound states of a particle confined to a torus";

  py::register_exception<SolverError>(m, "SolverError");

  py::class_<TorusGeometry>(m, "TorusGeometry")
      .def(py::init<double, double>(), py::arg("a"), py::arg("R"))
      .def_readonly("a", &TorusGeometry::a)
      .def_readonly("R", &TorusGeometry::R)
      .def_readonly("alpha", &TorusGeometry::alpha)
      .def("axis_distance", &TorusGeometry::axis_distance, py::arg("theta"));

  py::class_<MongeSurface>(m, "MongeSurface")
      .def(py::init([](std::function<double(double)> shape,
                       std::function<double(double)> shape_d1,
                       std::function<double(double)> shape_d2) {
             return MongeSurface{std::move(shape), std::move(shape_d1),
                                 std::move(shape_d2)};
           }),
           py::arg("shape"), py::arg("shape_d1"), py::arg("shape_d2"))
      .def("derivative_gap", &MongeSurface::derivative_gap, py::arg("rho"),
           py::arg("h"));

  py::class_<CurvatureBundle>(m, "CurvatureBundle")
      .def_readonly("k1", &CurvatureBundle::k1)
      .def_readonly("k2", &CurvatureBundle::k2)
      .def_readonly("H", &CurvatureBundle::H)
      .def_readonly("K", &CurvatureBundle::K)
      .def_readonly("Vc", &CurvatureBundle::Vc)
      .def("__repr__", [](const CurvatureBundle& b) {
        return "CurvatureBundle(k1=" + std::to_string(b.k1) +
               ", k2=" + std::to_string(b.k2) + ", Vc=" + std::to_string(b.Vc) +
               ")";
      });

  m.def("monge_curvatures", &monge_curvatures, py::arg("surface"),
        py::arg("rho"));
  m.def("torus_curvatures", &torus_curvatures, py::arg("geom"),
        py::arg("theta"));
  m.def("norm_weight", &norm_weight, py::arg("q"), py::arg("bundle"));

  py::enum_<Parity>(m, "Parity")
      .value("even", Parity::even)
      .value("odd", Parity::odd);

  py::class_<ModeSpec>(m, "ModeSpec")
      .def(py::init([](int m_, Parity parity, int n_basis, bool include_vc) {
             return ModeSpec{m_, parity, n_basis, include_vc};
           }),
           py::arg("m") = 0, py::arg("parity") = Parity::even,
           py::arg("n_basis") = 64, py::arg("include_vc") = true)
      .def_readwrite("m", &ModeSpec::m)
      .def_readwrite("parity", &ModeSpec::parity)
      .def_readwrite("n_basis", &ModeSpec::n_basis)
      .def_readwrite("include_vc", &ModeSpec::include_vc);

  py::class_<FullOperatorPair>(m, "FullOperatorPair")
      .def_readonly("a", &FullOperatorPair::a)
      .def_readonly("b", &FullOperatorPair::b)
      .def_readonly("alpha", &FullOperatorPair::alpha)
      .def_readonly("m", &FullOperatorPair::m)
      .def_readonly("n_basis", &FullOperatorPair::n_basis)
      .def_readonly("include_vc", &FullOperatorPair::include_vc);

  py::class_<OperatorPair>(m, "OperatorPair")
      .def_readonly("a", &OperatorPair::a)
      .def_readonly("b", &OperatorPair::b)
      .def_readonly("spec", &OperatorPair::spec)
      .def_readonly("alpha", &OperatorPair::alpha)
      .def("dim", &OperatorPair::dim);

  m.def("assemble_full", &assemble_full, py::arg("alpha"), py::arg("m"),
        py::arg("n_basis"), py::arg("include_vc"));
  m.def("parity_project", &parity_project, py::arg("full"), py::arg("parity"));
  m.def("assemble_sector", &assemble_sector, py::arg("alpha"), py::arg("spec"));
  m.def("quadrature_oracle", &quadrature_oracle, py::arg("alpha"), py::arg("m"),
        py::arg("include_vc"), py::arg("k"), py::arg("n"),
        py::arg("grid_points") = 4096);
  m.def("measure_gram", &measure_gram, py::arg("dim"), py::arg("alpha"),
        py::arg("parity"));

  py::class_<Eigenstate>(m, "Eigenstate")
      .def_readonly("beta", &Eigenstate::beta)
      .def_readonly("m", &Eigenstate::m)
      .def_readonly("parity", &Eigenstate::parity)
      .def_readonly("n_index", &Eigenstate::n_index)
      .def_readonly("degeneracy", &Eigenstate::degeneracy)
      .def_readonly("coeffs", &Eigenstate::coeffs)
      .def_readonly("norm_constant", &Eigenstate::norm_constant)
      .def_readonly("node_count", &Eigenstate::node_count)
      .def_readonly("degenerate", &Eigenstate::degenerate);

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("alpha", &Spectrum::alpha)
      .def_readonly("m", &Spectrum::m)
      .def_readonly("parity", &Spectrum::parity)
      .def_readonly("include_vc", &Spectrum::include_vc)
      .def_readonly("states", &Spectrum::states)
      .def_readonly("truncation_used", &Spectrum::truncation_used)
      .def_readonly("converged", &Spectrum::converged);

  m.def(
      "solve_pair",
      [](const OperatorPair& pair) {
        std::vector<std::pair<double, Eigen::VectorXd>> out;
        for (auto& ep : solve_pair(pair)) {
          out.emplace_back(ep.beta, std::move(ep.coeffs));
        }
        return out;
      },
      py::arg("pair"));
  m.def("evaluate_series", &evaluate_series, py::arg("coeffs"),
        py::arg("parity"), py::arg("theta"));
  m.def("count_nodes", &count_nodes, py::arg("coeffs"), py::arg("parity"),
        py::arg("samples") = kNodeSamples);
  m.def("normalize_state", &normalize_state, py::arg("coeffs"),
        py::arg("alpha"), py::arg("parity"), py::arg("m") = 0,
        py::arg("n_index") = 0);
  m.def("pencil_residual", &pencil_residual, py::arg("pair"), py::arg("beta"),
        py::arg("coeffs"));
  m.def("converge_spectrum", &converge_spectrum, py::arg("alpha"), py::arg("m"),
        py::arg("parity"), py::arg("include_vc"), py::arg("tol") = 1e-8,
        py::arg("n_start") = 16);

  py::class_<BoundStateTable>(m, "BoundStateTable")
      .def_readonly("alpha", &BoundStateTable::alpha)
      .def_readonly("m_max", &BoundStateTable::m_max)
      .def_readonly("entries", &BoundStateTable::entries)
      .def_readonly("total_count_sectors", &BoundStateTable::total_count_sectors)
      .def_readonly("total_count_with_degeneracy",
                    &BoundStateTable::total_count_with_degeneracy);

  py::enum_<TargetKind>(m, "TargetKind")
      .value("required", TargetKind::required)
      .value("disputed", TargetKind::disputed)
      .value("info", TargetKind::info);

  py::class_<TableTarget>(m, "TableTarget")
      .def_readonly("name", &TableTarget::name)
      .def_readonly("reference", &TableTarget::reference)
      .def_readonly("computed", &TableTarget::computed)
      .def_readonly("tolerance", &TableTarget::tolerance)
      .def_readonly("pass_", &TableTarget::pass)
      .def_readonly("kind", &TableTarget::kind)
      .def_readonly("note", &TableTarget::note)
      .def("diff", &TableTarget::diff);

  py::class_<TableDiffReport>(m, "TableDiffReport")
      .def_readonly("targets", &TableDiffReport::targets)
      .def("all_required_pass", &TableDiffReport::all_required_pass)
      .def("failed_required", &TableDiffReport::failed_required);

  m.def("bound_state_scan", &bound_state_scan, py::arg("alpha"),
        py::arg("m_max"));
  m.def("cutoff_m", &cutoff_m, py::arg("alpha"));
  m.def("magic_radius_check", &magic_radius_check, py::arg("m"));
  m.def("reproduce_tables", &reproduce_tables);
}

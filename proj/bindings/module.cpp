#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "negcurv/catalog.hpp"
#include "negcurv/cli.hpp"
#include "negcurv/curvature.hpp"
#include "negcurv/errors.hpp"
#include "negcurv/heintze.hpp"
#include "negcurv/io.hpp"
#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"
#include "negcurv/submersion.hpp"

namespace py = pybind11;
using namespace negcurv;

namespace {

py::dict validation_dict(const ValidationReport& r) {
  py::dict d;
  d["antisymmetry_residual"] = r.antisymmetry_residual;
  d["jacobi_residual"] = r.jacobi_residual;
  d["antisymmetry_ok"] = r.antisymmetry_ok;
  d["jacobi_ok"] = r.jacobi_ok;
  d["pass"] = r.passed();
  return d;
}

py::list spectrum_list(const Spectrum& s) {
  py::list out;
  for (const auto& z : s.values) out.append(z);
  return out;
}

py::dict verdict_dict(const HeintzeVerdict& v) {
  py::dict d;
  d["codim_ok"] = v.codim_ok;
  d["sign"] = v.sign > 0 ? "+" : "-";
  d["y0"] = v.y0;
  py::list graded;
  for (const auto& s : v.spectra_graded) graded.append(spectrum_list(s));
  d["graded_spectra"] = graded;
  d["spectrum_full"] = spectrum_list(v.spectrum_full);
  d["item2"] = v.verdict_item2;
  d["item3"] = v.verdict_item3;
  d["margin"] = v.margin;
  d["marginal"] = v.marginal;
  return d;
}

py::dict curvature_dict(const CurvatureReport& r) {
  py::dict d;
  d["K"] = r.value;
  d["numerator"] = r.numerator;
  d["denominator"] = r.denominator;
  d["commuting_residual"] = r.commuting_residual;
  d["orthogonality_residual"] = r.orthogonality_residual;
  d["method"] = r.method == CurvatureMethod::HomogeneousFormula ? "homogeneous" : "oracle";
  return d;
}

py::dict scan_dict(const ScanSummary& s) {
  py::dict d;
  d["samples"] = s.samples;
  d["accepted"] = s.accepted;
  d["acceptance_rate"] = s.acceptance_rate;
  d["empty"] = s.empty;
  if (!s.empty) {
    d["min_K"] = s.min_value;
    d["max_K"] = s.max_value;
    d["quantiles"] = s.quantiles;
  } else {
    d["min_K"] = py::none();
    d["max_K"] = py::none();
    d["quantiles"] = py::dict();
  }
  d["method"] = s.method == CurvatureMethod::HomogeneousFormula ? "homogeneous" : "oracle";
  return d;
}

}  // namespace

PYBIND11_MODULE(_negcurv, m) {
  m.doc() = "Heintze criterion checks and left-invariant Finsler curvature tools";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<StructureConstants>(m, "StructureConstants")
      .def(py::init<int, std::vector<std::string>>(), py::arg("dim"),
           py::arg("labels") = std::vector<std::string>{})
      .def("dim", &StructureConstants::dim)
      .def("c", &StructureConstants::c, py::arg("i"), py::arg("j"), py::arg("k"))
      .def("set_bracket", &StructureConstants::set_bracket, py::arg("i"), py::arg("j"),
           py::arg("k"), py::arg("value"))
      .def("bracket", &StructureConstants::bracket, py::arg("x"), py::arg("y"))
      .def("ad", &StructureConstants::ad, py::arg("x"))
      .def("labels", &StructureConstants::labels);

  m.def("load_algebra", &load_algebra, py::arg("path"));
  m.def("validate",
        [](const StructureConstants& g) { return validation_dict(validate(g)); });
  m.def("is_solvable", &is_solvable);
  m.def("killing_form", &killing_form);
  m.def("change_basis", &change_basis, py::arg("algebra"), py::arg("p"));
  m.def("descending_sequence", [](const StructureConstants& g) {
    py::list out;
    for (const auto& s : descending_sequence(g)) out.append(s.basis());
    return out;
  });
  m.def("spectrum", [](const Eigen::MatrixXd& a) {
    return spectrum_list(spectrum(LinearEndomorphism{a}));
  });
  m.def("check_heintze",
        [](const StructureConstants& g) { return verdict_dict(check_heintze(g)); });
  m.def("graded_spectra", [](const StructureConstants& g, const Eigen::VectorXd& y0) {
    py::list out;
    for (const auto& s : graded_spectra(g, y0)) out.append(spectrum_list(s));
    return out;
  });
  m.def(
      "classify_growth",
      [](const Eigen::MatrixXd& a, const Eigen::VectorXd& v, double dt, int steps,
         double ratio) {
        const GrowthClassification c =
            classify_growth(LinearEndomorphism{a}, v, GrowthSchedule{dt, steps, ratio});
        py::dict d;
        d["kind"] = c.kind == GrowthKind::Unbounded ? "Unbounded" : "Bounded";
        d["witness_times"] = c.witness_times;
        d["witness_norms"] = c.witness_norms;
        return d;
      },
      py::arg("a"), py::arg("v"), py::arg("dt") = 0.5, py::arg("steps") = 200,
      py::arg("ratio") = 1e6);

  py::class_<MinkowskiNorm>(m, "MinkowskiNorm")
      .def_static("riemannian", &MinkowskiNorm::riemannian, py::arg("a"))
      .def_static("randers", &MinkowskiNorm::randers, py::arg("a"), py::arg("b"))
      .def_static("custom", &MinkowskiNorm::custom, py::arg("dim"), py::arg("evaluator"))
      .def("dim", &MinkowskiNorm::dim)
      .def("__call__", &MinkowskiNorm::operator())
      .def("evaluate", &MinkowskiNorm::evaluate);

  m.def("load_metric", &load_metric, py::arg("path"));
  m.def("fundamental_tensor", [](const MinkowskiNorm& f, const Eigen::VectorXd& y) {
    return fundamental_tensor(f, y).G;
  });
  m.def(
      "validate_norm",
      [](const MinkowskiNorm& f, int samples, std::uint64_t seed) {
        const NormValidationReport r = validate_norm(f, samples, seed);
        py::dict d;
        d["worst_homogeneity"] = r.worst_homogeneity;
        d["min_value_on_sphere"] = r.min_value_on_sphere;
        d["worst_min_eigenvalue"] = r.worst_min_eigenvalue;
        d["pass"] = r.passed();
        return d;
      },
      py::arg("f"), py::arg("samples"), py::arg("seed") = 42);

  py::class_<LinearSubmersion>(m, "LinearSubmersion")
      .def(py::init<Eigen::MatrixXd>(), py::arg("map"))
      .def("source_dim", &LinearSubmersion::source_dim)
      .def("target_dim", &LinearSubmersion::target_dim)
      .def("kernel", [](const LinearSubmersion& l) { return l.kernel().basis(); });

  m.def(
      "induced_norm",
      [](const MinkowskiNorm& f, const LinearSubmersion& l, const Eigen::VectorXd& vbar) {
        return induced_norm(f, l, vbar);
      },
      py::arg("f"), py::arg("l"), py::arg("vbar"));
  m.def(
      "horizontal_lift",
      [](const MinkowskiNorm& f, const LinearSubmersion& l, const Eigen::VectorXd& ubar) {
        const HorizontalLift h = horizontal_lift(f, l, ubar);
        py::dict d;
        d["lift"] = h.lift;
        d["certified_min"] = h.certified_min;
        d["orthogonality_residual"] = h.orthogonality_residual;
        return d;
      },
      py::arg("f"), py::arg("l"), py::arg("ubar"));
  m.def(
      "isometry_check",
      [](const MinkowskiNorm& f, const LinearSubmersion& l, const Eigen::VectorXd& ubar,
         int trials, std::uint64_t seed) {
        const IsometryReport r = isometry_check(f, l, ubar, trials, seed);
        py::dict d;
        d["max_discrepancy"] = r.max_discrepancy;
        d["trials"] = r.trials;
        return d;
      },
      py::arg("f"), py::arg("l"), py::arg("ubar"), py::arg("trials") = 50, py::arg("seed") = 42);

  py::class_<LeftInvariantMetric>(m, "LeftInvariantMetric")
      .def(py::init<StructureConstants, MinkowskiNorm, int>(), py::arg("algebra"),
           py::arg("norm"), py::arg("audit_samples") = 16)
      .def("reliable", &LeftInvariantMetric::reliable);

  m.def(
      "flag_curvature",
      [](const LeftInvariantMetric& metric, const Eigen::VectorXd& pole,
         const Eigen::VectorXd& partner) {
        return curvature_dict(flag_curvature(metric, FlagSpec{pole, partner}));
      },
      py::arg("metric"), py::arg("pole"), py::arg("partner"));
  m.def("u_vector", &u_vector, py::arg("metric"), py::arg("pole"), py::arg("partner"));
  m.def("riemannian_sectional", &riemannian_sectional, py::arg("metric"), py::arg("x"),
        py::arg("y"));
  m.def(
      "scan_flags",
      [](const LeftInvariantMetric& metric, int samples, std::uint64_t seed) {
        // python-backed custom norms must stay on this thread, so jobs = 1
        return scan_dict(scan_flags(metric, samples, seed, 1));
      },
      py::arg("metric"), py::arg("samples") = 1000, py::arg("seed") = 42);
  m.def(
      "witness_nonnegative",
      [](const LeftInvariantMetric& metric, std::uint64_t seed, int budget) -> py::object {
        const auto w = witness_nonnegative(metric, seed, budget);
        if (!w) return py::none();
        py::dict d;
        d["pole"] = w->flag.pole;
        d["partner"] = w->flag.partner;
        d["curvature"] = curvature_dict(w->report);
        return d;
      },
      py::arg("metric"), py::arg("seed") = 42, py::arg("budget") = 1000);
  m.def(
      "growth_constant_check",
      [](const LeftInvariantMetric& metric, const Eigen::VectorXd& y0, int steps) {
        const GrowthBoundReport r = growth_constant_check(metric, y0, steps);
        py::dict d;
        d["c_estimate"] = r.c_estimate;
        d["bound_holds"] = r.bound_holds;
        d["worst_margin"] = r.worst_margin;
        d["inconsistent"] = r.inconsistent;
        return d;
      },
      py::arg("metric"), py::arg("y0"), py::arg("steps") = 50);

  m.def("catalog", []() {
    py::list out;
    for (const auto& e : catalog()) {
      py::dict d;
      d["name"] = e.name;
      d["dim"] = e.algebra.dim();
      d["expected_heintze"] = e.expected_heintze;
      d["algebra"] = e.algebra;
      d["note"] = e.note;
      out.append(d);
    }
    return out;
  });
}

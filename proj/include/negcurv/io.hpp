#ifndef NEGCURV_IO_HPP
#define NEGCURV_IO_HPP

#include <string>

#include <json.hpp>

#include "negcurv/curvature.hpp"
#include "negcurv/heintze.hpp"
#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"
#include "negcurv/submersion.hpp"

namespace negcurv {

// Algebra file schema: { "dim": n, "labels": [...],
//   "brackets": [ {"i": 1, "j": 2, "coeffs": {"2": 1.0}} ] }
// Indices are 1-based; the antisymmetric closure is applied on load and
// unspecified brackets are zero.
StructureConstants algebra_from_json(const nlohmann::json& j);
StructureConstants load_algebra(const std::string& path);
nlohmann::json algebra_to_json(const StructureConstants& g);

// Metric file schema: { "type": "riemannian", "A": [[...]] } or
// { "type": "randers", "A": [[...]], "b": [...] }.
MinkowskiNorm metric_from_json(const nlohmann::json& j);
MinkowskiNorm load_metric(const std::string& path);

// Projection file schema: { "map": [[...]] }.
Eigen::MatrixXd load_projection(const std::string& path);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const HeintzeVerdict& v);
nlohmann::json to_json(const CurvatureReport& r);
nlohmann::json to_json(const ScanSummary& s);
nlohmann::json to_json(const NormValidationReport& r);
nlohmann::json to_json(const HorizontalLift& lift);
nlohmann::json to_json(const GrowthClassification& c);
nlohmann::json to_json(const GrowthBoundReport& r);

}  // namespace negcurv

#endif

#include "negcurv/io.hpp"

#include <fstream>

#include "negcurv/errors.hpp"

namespace negcurv {

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw InputError(what + " rows must be non-empty arrays");
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw InputError(what + " rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

Eigen::VectorXd vector_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

}  // namespace

StructureConstants algebra_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("algebra file: integer field 'dim' is required");
  const int dim = j["dim"].get<int>();
  if (dim <= 0) throw InputError("algebra file: dim must be positive");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    if (static_cast<int>(labels.size()) != dim)
      throw InputError("algebra file: labels length must equal dim");
  }

  StructureConstants g(dim, labels);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("algebra file: brackets must be an array");
    for (const auto& entry : j["brackets"]) {
      const int i = entry.at("i").get<int>();
      const int jj = entry.at("j").get<int>();
      if (i < 1 || jj < 1 || i > dim || jj > dim)
        throw InputError("algebra file: bracket indices are 1-based and bounded by dim");
      if (i == jj) throw InputError("algebra file: [e_i, e_i] must be zero");
      const auto& coeffs = entry.at("coeffs");
      if (!coeffs.is_object()) throw InputError("algebra file: coeffs must be an object");
      for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
        int k = 0;
        try {
          k = std::stoi(it.key());
        } catch (...) {
          throw InputError("algebra file: coeff keys must be 1-based indices");
        }
        if (k < 1 || k > dim) throw InputError("algebra file: coeff index out of range");
        g.set_bracket(i - 1, jj - 1, k - 1, it.value().get<double>());
      }
    }
  }
  return g;
}

StructureConstants load_algebra(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

nlohmann::json algebra_to_json(const StructureConstants& g) {
  nlohmann::json j;
  j["dim"] = g.dim();
  if (!g.labels().empty()) j["labels"] = g.labels();
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      nlohmann::json coeffs = nlohmann::json::object();
      for (int k = 0; k < g.dim(); ++k)
        if (g.c(i, jj, k) != 0.0) coeffs[std::to_string(k + 1)] = g.c(i, jj, k);
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

MinkowskiNorm metric_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  const Eigen::MatrixXd a = matrix_from_json(j.at("A"), "metric matrix A");
  if (type == "riemannian") return MinkowskiNorm::riemannian(a);
  if (type == "randers") {
    const Eigen::VectorXd b = vector_from_json(j.at("b"), "metric covector b");
    return MinkowskiNorm::randers(a, b);
  }
  throw InputError("metric file: type must be 'riemannian' or 'randers'");
}

MinkowskiNorm load_metric(const std::string& path) {
  return metric_from_json(read_json_file(path));
}

Eigen::MatrixXd load_projection(const std::string& path) {
  return matrix_from_json(read_json_file(path).at("map"), "projection map");
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : s.values) arr.push_back({{"re", z.real()}, {"im", z.imag()}});
  return arr;
}

nlohmann::json to_json(const ValidationReport& r) {
  return {{"antisymmetry_residual", r.antisymmetry_residual},
          {"jacobi_residual", r.jacobi_residual},
          {"antisymmetry_tolerance", r.antisymmetry_tolerance},
          {"jacobi_tolerance", r.jacobi_tolerance},
          {"antisymmetry_ok", r.antisymmetry_ok},
          {"jacobi_ok", r.jacobi_ok},
          {"pass", r.passed()}};
}

nlohmann::json to_json(const HeintzeVerdict& v) {
  nlohmann::json graded = nlohmann::json::array();
  for (const auto& s : v.spectra_graded) graded.push_back(to_json(s));
  return {{"codim_ok", v.codim_ok},
          {"sign", v.sign > 0 ? "+" : "-"},
          {"graded_spectra", graded},
          {"spectrum_full", to_json(v.spectrum_full)},
          {"item2", v.verdict_item2},
          {"item3", v.verdict_item3},
          {"margin", v.margin},
          {"marginal", v.marginal}};
}

nlohmann::json to_json(const CurvatureReport& r) {
  return {{"K", r.value},
          {"numerator", r.numerator},
          {"denominator", r.denominator},
          {"residuals",
           {{"commuting", r.commuting_residual}, {"orthogonality", r.orthogonality_residual}}},
          {"method",
           r.method == CurvatureMethod::HomogeneousFormula ? "homogeneous" : "oracle"}};
}

nlohmann::json to_json(const ScanSummary& s) {
  nlohmann::json j = {{"samples", s.samples},
                      {"evaluated", s.evaluated},
                      {"accepted", s.accepted},
                      {"acceptance_rate", s.acceptance_rate},
                      {"empty", s.empty},
                      {"method", s.method == CurvatureMethod::HomogeneousFormula ? "homogeneous"
                                                                                 : "oracle"}};
  if (!s.empty) {
    j["min_K"] = s.min_value;
    j["max_K"] = s.max_value;
    j["quantiles"] = s.quantiles;
  } else {
    j["min_K"] = nullptr;
    j["max_K"] = nullptr;
    j["quantiles"] = nlohmann::json::object();
  }
  return j;
}

nlohmann::json to_json(const NormValidationReport& r) {
  std::vector<double> dir(r.worst_direction.data(),
                          r.worst_direction.data() + r.worst_direction.size());
  return {{"samples", r.samples},
          {"worst_homogeneity", r.worst_homogeneity},
          {"min_value_on_sphere", r.min_value_on_sphere},
          {"worst_min_eigenvalue", r.worst_min_eigenvalue},
          {"worst_direction", dir},
          {"homogeneity_ok", r.homogeneity_ok},
          {"positivity_ok", r.positivity_ok},
          {"convexity_ok", r.convexity_ok},
          {"pass", r.passed()}};
}

nlohmann::json to_json(const HorizontalLift& lift) {
  std::vector<double> target(lift.target_vector.data(),
                             lift.target_vector.data() + lift.target_vector.size());
  std::vector<double> vec(lift.lift.data(), lift.lift.data() + lift.lift.size());
  return {{"target", target},
          {"lift", vec},
          {"certified_min", lift.certified_min},
          {"orthogonality_residual", lift.orthogonality_residual},
          {"iterations", lift.iterations}};
}

nlohmann::json to_json(const GrowthClassification& c) {
  return {{"kind", c.kind == GrowthKind::Unbounded ? "Unbounded" : "Bounded"},
          {"witness_times", c.witness_times},
          {"witness_norms", c.witness_norms}};
}

nlohmann::json to_json(const GrowthBoundReport& r) {
  return {{"c_estimate", r.c_estimate},
          {"initial_value", r.initial_value},
          {"bound_holds", r.bound_holds},
          {"worst_margin", r.worst_margin},
          {"inconsistent", r.inconsistent},
          {"grid_points", r.grid_points}};
}

}  // namespace negcurv

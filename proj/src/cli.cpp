#include "negcurv/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "negcurv/catalog.hpp"
#include "negcurv/curvature.hpp"
#include "negcurv/errors.hpp"
#include "negcurv/io.hpp"
#include "negcurv/submersion.hpp"

namespace negcurv {

namespace {

void emit(const std::string& text, const RunConfig& config, std::ostream& out) {
  if (config.output == "-" || config.output.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw InputError("cannot write output file: " + config.output);
  file << text << "\n";
}

void emit(const nlohmann::json& report, const RunConfig& config, std::ostream& out) {
  emit(report.dump(2), config, out);
}

double tol_or(const RunConfig& config, const std::string& name, double fallback) {
  const auto it = config.tolerance_overrides.find(name);
  return it == config.tolerance_overrides.end() ? fallback : it->second;
}

FlagTolerances flag_tolerances(const RunConfig& config) {
  FlagTolerances tol;
  tol.commuting = tol_or(config, "commuting", tol.commuting);
  tol.orthogonality = tol_or(config, "orthogonality", tol.orthogonality);
  return tol;
}

HeintzeOptions heintze_options(const RunConfig& config) {
  HeintzeOptions opts;
  opts.positivity_rel = tol_or(config, "positivity", opts.positivity_rel);
  opts.marginal_threshold = tol_or(config, "marginal", opts.marginal_threshold);
  return opts;
}

MinkowskiNorm metric_for(const RunConfig& config, int dim) {
  if (config.metric_path.empty())
    return MinkowskiNorm::riemannian(Eigen::MatrixXd::Identity(dim, dim));
  MinkowskiNorm f = load_metric(config.metric_path);
  if (f.dim() != dim)
    throw InputError("metric dimension does not match the algebra dimension");
  return f;
}

int run_validate(const RunConfig& config, std::ostream& out) {
  const StructureConstants g = load_algebra(config.algebra_path);
  const ValidationReport report = validate(g);
  emit(to_json(report), config, out);
  return report.passed() ? kExitAffirmative : kExitNegative;
}

int run_check(const RunConfig& config, std::ostream& out) {
  const StructureConstants g = load_algebra(config.algebra_path);
  const HeintzeVerdict verdict = check_heintze(g, heintze_options(config));
  emit(to_json(verdict), config, out);
  return (verdict.verdict_item2 && verdict.verdict_item3) ? kExitAffirmative : kExitNegative;
}

int run_curvature(const RunConfig& config, std::ostream& out) {
  if (!config.pole || !config.partner)
    throw InputError("curvature: --pole and --partner are required");
  const StructureConstants g = load_algebra(config.algebra_path);
  const LeftInvariantMetric m(g, metric_for(config, g.dim()));
  const CurvatureReport report =
      flag_curvature(m, FlagSpec{*config.pole, *config.partner}, flag_tolerances(config));
  emit(to_json(report), config, out);
  return kExitAffirmative;
}

int run_scan(const RunConfig& config, std::ostream& out) {
  const StructureConstants g = load_algebra(config.algebra_path);
  const LeftInvariantMetric m(g, metric_for(config, g.dim()));
  const ScanSummary summary =
      scan_flags(m, config.samples, config.seed, config.jobs, flag_tolerances(config));
  emit(to_json(summary), config, out);
  return kExitAffirmative;
}

int run_witness(const RunConfig& config, std::ostream& out) {
  const StructureConstants g = load_algebra(config.algebra_path);
  const LeftInvariantMetric m(g, metric_for(config, g.dim()));
  const auto witness =
      witness_nonnegative(m, config.seed, config.samples, flag_tolerances(config));
  nlohmann::json report;
  if (witness) {
    std::vector<double> pole(witness->flag.pole.data(),
                             witness->flag.pole.data() + witness->flag.pole.size());
    std::vector<double> partner(witness->flag.partner.data(),
                                witness->flag.partner.data() + witness->flag.partner.size());
    report = {{"witness_found", true},
              {"flag", {{"pole", pole}, {"partner", partner}}},
              {"curvature", to_json(witness->report)}};
  } else {
    report = {{"witness_found", false}, {"flag", nullptr}, {"curvature", nullptr}};
  }
  emit(report, config, out);
  return witness ? kExitNegative : kExitAffirmative;
}

int run_submersion(const RunConfig& config, std::ostream& out) {
  if (config.metric_path.empty())
    throw InputError("submersion: --metric is required");
  if (config.projection_path.empty())
    throw InputError("submersion: --projection is required");
  const MinkowskiNorm f = load_metric(config.metric_path);
  const LinearSubmersion l(load_projection(config.projection_path));
  if (f.dim() != l.source_dim())
    throw InputError("submersion: metric dimension must match the map's source dimension");
  Eigen::VectorXd ubar;
  if (config.target_vector) {
    ubar = *config.target_vector;
    if (ubar.size() != l.target_dim())
      throw InputError("submersion: target vector dimension mismatch");
  } else {
    ubar = Eigen::VectorXd::Zero(l.target_dim());
    ubar[0] = 1.0;
  }
  const HorizontalLift lift = horizontal_lift(f, l, ubar);
  const int trials = std::min(config.samples, 200);
  const IsometryReport iso = isometry_check(f, l, ubar, trials, config.seed);
  nlohmann::json report = {{"induced_norm", lift.certified_min},
                           {"lift", to_json(lift)},
                           {"isometry",
                            {{"max_discrepancy", iso.max_discrepancy}, {"trials", iso.trials}}}};
  emit(report, config, out);
  return kExitAffirmative;
}

int run_catalog(const RunConfig& config, std::ostream& out) {
  std::ostringstream table;
  table << std::left << std::setw(16) << "name" << std::setw(6) << "dim" << std::setw(10)
        << "verdict" << "note\n";
  for (const auto& entry : catalog()) {
    table << std::left << std::setw(16) << entry.name << std::setw(6) << entry.algebra.dim()
          << std::setw(10) << (entry.expected_heintze ? "true" : "false") << entry.note << "\n";
  }
  emit(table.str(), config, out);
  return kExitAffirmative;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.samples < 1) throw InputError("samples must be >= 1");
    if (config.command == "validate") return run_validate(config, out);
    if (config.command == "check") return run_check(config, out);
    if (config.command == "curvature") return run_curvature(config, out);
    if (config.command == "scan") return run_scan(config, out);
    if (config.command == "witness") return run_witness(config, out);
    if (config.command == "submersion") return run_submersion(config, out);
    if (config.command == "catalog") return run_catalog(config, out);
    throw InputError("unknown command: " + config.command);
  } catch (const FlagNotApplicableError& e) {
    nlohmann::json diag = {{"error", e.what()},
                           {"residuals",
                            {{"commuting", e.commuting_residual},
                             {"orthogonality", e.orthogonality_residual}}}};
    err << diag.dump(2) << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
    return kExitError;
  }
}

}  // namespace negcurv

#ifndef NEGCURV_CURVATURE_HPP
#define NEGCURV_CURVATURE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "negcurv/heintze.hpp"
#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"

namespace negcurv {

/// A left-invariant Finsler metric: one Minkowski norm on the Lie algebra.
/// Only the group itself acts, so the reductive decomposition is 0 + g and
/// bracket projections in the curvature formula are the identity.
struct LeftInvariantMetric {
  StructureConstants algebra;
  MinkowskiNorm norm;
  NormValidationReport audit;

  LeftInvariantMetric(StructureConstants g, MinkowskiNorm f, int audit_samples = 16);
  bool reliable() const { return audit.passed(); }
};

struct FlagSpec {
  Eigen::VectorXd pole;     // u != 0
  Eigen::VectorXd partner;  // v linearly independent from u
};

enum class CurvatureMethod { HomogeneousFormula, RiemannianOracle };

struct CurvatureReport {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double commuting_residual = 0.0;
  double orthogonality_residual = 0.0;
  CurvatureMethod method = CurvatureMethod::HomogeneousFormula;
};

struct FlagTolerances {
  double commuting = 1e-8;
  double orthogonality = 1e-8;
};

/// U(u, v): solves 2 g_u(U, w) = g_u([u,w], v) + g_u(u, [v,w]) over the basis.
Eigen::VectorXd u_vector(const LeftInvariantMetric& m, const Eigen::VectorXd& u,
                         const Eigen::VectorXd& v);

/// Homogeneous flag curvature for a commuting flag whose pole satisfies
/// g_u(u, [u, g]) = 0. Throws FlagNotApplicableError outside those hypotheses.
CurvatureReport flag_curvature(const LeftInvariantMetric& m, const FlagSpec& flag,
                               const FlagTolerances& tol = {});

/// Sectional curvature of span{x, y} for a Riemannian norm, via the Koszul
/// formula for left-invariant metrics. Serves as the independent oracle.
double riemannian_sectional(const LeftInvariantMetric& m, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y);

struct ScanSummary {
  int samples = 0;
  int evaluated = 0;
  int accepted = 0;
  double acceptance_rate = 0.0;
  bool empty = true;
  double min_value = 0.0;
  double max_value = 0.0;
  std::map<std::string, double> quantiles;
  CurvatureMethod method = CurvatureMethod::RiemannianOracle;
};

/// Random-flag survey. Riemannian norms scan uniform planes through the
/// oracle; other norms sample poles, nudge them onto the orthogonality locus
/// and keep flags that pass the formula hypotheses.
ScanSummary scan_flags(const LeftInvariantMetric& m, int samples, std::uint64_t seed,
                       int jobs = 1, const FlagTolerances& tol = {});

struct WitnessResult {
  FlagSpec flag;
  CurvatureReport report;
};

/// Searches for a flag certifying that the metric is not negatively curved:
/// basis pairs first, then transverse lifts with commuting kernel partners,
/// then lifted zeros of the pairing on l0/l1. Empty when nothing qualifies
/// within the budget (the expected outcome on Heintze-positive algebras).
std::optional<WitnessResult> witness_nonnegative(const LeftInvariantMetric& m,
                                                 std::uint64_t seed = 42, int budget = 1000,
                                                 const FlagTolerances& tol = {});

struct GrowthBoundReport {
  double c_estimate = 0.0;
  double initial_value = 0.0;   // f(0) = F̄(ū)² / 2
  bool bound_holds = false;
  double worst_margin = 0.0;    // min over the grid of f(t) / (e^{ct} f(0)) - 1
  bool inconsistent = false;    // c <= 0 on a criterion-positive algebra
  int grid_points = 0;
};

/// Estimates c = min ḡ_ū(ū, ad ū)/ḡ_ū(ū, ū) on the induced norm of l0/l1 and
/// verifies f(t) >= e^{ct} f(0) (1 - 1e-6) for the exponential orbit on [0, 5].
GrowthBoundReport growth_constant_check(const LeftInvariantMetric& m, const Eigen::VectorXd& y0,
                                        int steps);

}  // namespace negcurv

#endif

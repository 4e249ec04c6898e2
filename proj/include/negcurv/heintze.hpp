#ifndef NEGCURV_HEINTZE_HPP
#define NEGCURV_HEINTZE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "negcurv/lie_algebra.hpp"

namespace negcurv {

struct HeintzeOptions {
  // real part counts as positive when above positivity_rel * spectral radius
  double positivity_rel = 1e-7;
  // verdicts whose margin falls below this are flagged marginal
  double marginal_threshold = 1e-4;
};

struct HeintzeVerdict {
  bool codim_ok = false;
  Eigen::VectorXd y0;           // representative actually used (zero if codim fails)
  int sign = +1;                // sign applied to the unit complement vector
  std::vector<Spectrum> spectra_graded;
  Spectrum spectrum_full;
  bool verdict_item2 = false;   // positivity on l0/l1
  bool verdict_item3 = false;   // positivity on l0
  double margin = 0.0;          // smallest real part for the reported sign
  bool marginal = false;
};

/// Decides the codimension-one and positive-spectrum conditions for a
/// validated solvable algebra of dim >= 2. Rejects anything else.
HeintzeVerdict check_heintze(const StructureConstants& g, const HeintzeOptions& opts = {});

/// One spectrum per graded piece l^l / l^{l+1}, 0 <= l <= k-1. Empty for an
/// abelian algebra.
std::vector<Spectrum> graded_spectra(const StructureConstants& g, const Eigen::VectorXd& y0);

struct GrowthSchedule {
  double dt = 0.5;
  int steps = 200;
  double ratio = 1e6;
};

enum class GrowthKind { Unbounded, Bounded };

struct GrowthClassification {
  GrowthKind kind = GrowthKind::Bounded;
  std::vector<double> witness_times;  // record-high sample times
  std::vector<double> witness_norms;  // strictly increasing norms at those times
};

/// Samples |e^{tA} v| on the schedule and reports Unbounded when an increasing
/// subsequence of record highs ends above ratio * |v|.
GrowthClassification classify_growth(const LinearEndomorphism& a, const Eigen::VectorXd& v,
                                     const GrowthSchedule& schedule = {});

struct ExpPolyTerm {
  int degree = 0;                      // k_i
  std::complex<double> rate;           // xi_i, Re > 0
  Eigen::VectorXcd amplitude;          // w_i != 0
};

/// Times at which |sum_i t^{k_i} e^{xi_i t} w_i| first exceeds 10, 10^2, ...,
/// 10^6, found by dense sampling with a doubling horizon.
std::vector<double> exp_poly_growth_witness(const std::vector<ExpPolyTerm>& terms);

}  // namespace negcurv

#endif

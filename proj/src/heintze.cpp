#include "negcurv/heintze.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "negcurv/errors.hpp"

namespace negcurv {

namespace {

std::vector<Spectrum> graded_spectra_from(const StructureConstants& g,
                                          const Eigen::VectorXd& y0,
                                          const std::vector<Subspace>& seq) {
  std::vector<Spectrum> out;
  const int k = static_cast<int>(seq.size()) - 1;  // seq.back() is the zero term
  for (int l = 0; l < k; ++l) {
    QuotientMap q(seq[l], seq[l + 1]);
    out.push_back(spectrum(induced_endomorphism(g, y0, q)));
  }
  return out;
}

Spectrum full_spectrum_on_l0(const StructureConstants& g, const Eigen::VectorXd& y0,
                             const Subspace& l0) {
  QuotientMap whole(l0, Subspace(g.dim()));
  return spectrum(induced_endomorphism(g, y0, whole));
}

bool all_positive(const Spectrum& s, double threshold) {
  for (const auto& z : s.values)
    if (z.real() <= threshold) return false;
  return true;
}

}  // namespace

std::vector<Spectrum> graded_spectra(const StructureConstants& g, const Eigen::VectorXd& y0) {
  return graded_spectra_from(g, y0, descending_sequence(g));
}

HeintzeVerdict check_heintze(const StructureConstants& g, const HeintzeOptions& opts) {
  if (g.dim() < 2) throw InputError("check_heintze: dim >= 2 required");
  const ValidationReport vr = validate(g);
  if (!vr.passed()) throw InputError("check_heintze: structure constants fail validation");
  if (!is_solvable(g)) throw InputError("check_heintze: algebra is not solvable");

  const std::vector<Subspace> seq = descending_sequence(g);
  const Subspace& l0 = seq.front();

  HeintzeVerdict verdict;
  verdict.codim_ok = (g.dim() == l0.dim() + 1);
  if (!verdict.codim_ok) {
    verdict.y0 = Eigen::VectorXd::Zero(g.dim());
    return verdict;
  }

  // unit spanning vector of the orthogonal complement of l0
  const Eigen::MatrixXd comp = null_space(l0.basis().transpose());
  if (comp.cols() != 1) throw NumericalError("check_heintze: complement of l0 is not a line");
  const Eigen::VectorXd y = comp.col(0);

  double best_margin = -std::numeric_limits<double>::infinity();
  for (int sign : {+1, -1}) {
    const Eigen::VectorXd y0 = sign * y;
    const Spectrum full = full_spectrum_on_l0(g, y0, l0);
    const double margin = full.min_real();
    if (margin > best_margin) {
      best_margin = margin;
      verdict.sign = sign;
      verdict.y0 = y0;
      verdict.spectrum_full = full;
    }
  }
  verdict.spectra_graded = graded_spectra_from(g, verdict.y0, seq);
  verdict.margin = best_margin;

  const double threshold = opts.positivity_rel * verdict.spectrum_full.spectral_radius();
  verdict.verdict_item3 = all_positive(verdict.spectrum_full, threshold);
  verdict.verdict_item2 =
      !verdict.spectra_graded.empty() && all_positive(verdict.spectra_graded.front(), threshold);
  verdict.marginal = verdict.margin < opts.marginal_threshold;
  return verdict;
}

GrowthClassification classify_growth(const LinearEndomorphism& a, const Eigen::VectorXd& v,
                                     const GrowthSchedule& schedule) {
  if (v.size() != a.dim()) throw InputError("classify_growth: vector length mismatch");
  if (v.norm() == 0.0) throw InputError("classify_growth: v must be nonzero");
  if (schedule.steps < 1 || schedule.dt <= 0.0 || schedule.ratio <= 1.0)
    throw InputError("classify_growth: bad schedule");

  const Eigen::MatrixXd step = matrix_exp(schedule.dt * a.matrix);
  const double initial = v.norm();
  const double target = schedule.ratio * initial;

  GrowthClassification out;
  Eigen::VectorXd w = v;
  double record = initial;
  for (int n = 1; n <= schedule.steps; ++n) {
    w = step * w;
    const double norm = w.norm();
    if (!std::isfinite(norm)) {
      // overflow: the orbit escaped any finite threshold
      out.witness_times.push_back(n * schedule.dt);
      out.witness_norms.push_back(std::numeric_limits<double>::max());
      out.kind = GrowthKind::Unbounded;
      return out;
    }
    if (norm > record) {
      record = norm;
      out.witness_times.push_back(n * schedule.dt);
      out.witness_norms.push_back(norm);
      if (record > target) {
        out.kind = GrowthKind::Unbounded;
        return out;
      }
    }
  }
  out.kind = GrowthKind::Bounded;
  out.witness_times.clear();
  out.witness_norms.clear();
  return out;
}

std::vector<double> exp_poly_growth_witness(const std::vector<ExpPolyTerm>& terms) {
  if (terms.empty()) throw PreconditionError("exp_poly_growth_witness: no terms");
  const auto vdim = terms.front().amplitude.size();
  double max_im = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.degree < 0) throw PreconditionError("exp_poly_growth_witness: degree must be >= 0");
    if (!(t.rate.real() > 0.0))
      throw PreconditionError("exp_poly_growth_witness: all rates need positive real part");
    if (t.amplitude.size() != vdim || t.amplitude.norm() == 0.0)
      throw PreconditionError("exp_poly_growth_witness: amplitudes must be nonzero, same dim");
    max_im = std::max(max_im, std::abs(t.rate.imag()));
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const bool same_rate =
          std::abs(t.rate - terms[j].rate) <= 1e-12 * (1.0 + std::abs(t.rate));
      if (t.degree == terms[j].degree && same_rate)
        throw PreconditionError("exp_poly_growth_witness: (degree, rate) pairs must be distinct");
    }
  }

  const auto f_norm = [&](double time) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(vdim);
    for (const auto& t : terms)
      acc += std::pow(time, t.degree) * std::exp(t.rate * time) * t.amplitude;
    return acc.norm();
  };

  // dense enough to see every oscillation peak of the fastest frequency
  const double dt = std::min(0.05, M_PI / (16.0 * (1.0 + max_im)));
  constexpr double kMaxHorizon = 1e5;

  std::vector<double> crossings;
  double horizon = 8.0;
  double t = dt;
  double threshold = 10.0;
  while (crossings.size() < 6) {
    if (t > horizon) {
      horizon *= 2.0;
      if (horizon > kMaxHorizon)
        throw NumericalError("exp_poly_growth_witness: no crossing before the horizon cap");
      continue;
    }
    const double value = f_norm(t);
    while (crossings.size() < 6 && value > threshold) {
      crossings.push_back(t);
      threshold *= 10.0;
    }
    t += dt;
  }
  return crossings;
}

}  // namespace negcurv

#include "negcurv/submersion.hpp"

#include <cmath>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/rng.hpp"

namespace negcurv {

LinearSubmersion::LinearSubmersion(Eigen::MatrixXd map) : map_(std::move(map)), kernel_(1) {
  if (map_.rows() == 0 || map_.cols() == 0 || map_.rows() > map_.cols())
    throw InputError("LinearSubmersion: map must be target_dim x source_dim with target <= source");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(map_, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[sv.size() - 1] <= kRankRelTol * sv[0])
    throw InputError("LinearSubmersion: map does not have full row rank");
  pinv_ = svd.solve(Eigen::MatrixXd::Identity(map_.rows(), map_.rows()));
  kernel_ = Subspace::span(null_space(map_, sv[0]));
}

Eigen::VectorXd LinearSubmersion::min_norm_preimage(const Eigen::VectorXd& vbar) const {
  if (vbar.size() != target_dim()) throw InputError("min_norm_preimage: dimension mismatch");
  return pinv_ * vbar;
}

namespace {

struct FiberSolution {
  Eigen::VectorXd point;
  double norm_value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// minimize F^2/2 over { base + K t } where K is an orthonormal kernel basis
FiberSolution minimize_on_fiber(const MinkowskiNorm& f, const Eigen::VectorXd& base,
                                const Eigen::MatrixXd& kernel, const FiberSolverOptions& opts,
                                const Eigen::VectorXd& t_start) {
  const auto objective = [&f](const Eigen::VectorXd& v) {
    const double value = f(v);
    return 0.5 * value * value;
  };

  FiberSolution sol;
  if (kernel.cols() == 0) {
    sol.point = base;
    sol.norm_value = f(base);
    return sol;
  }

  Eigen::VectorXd t = t_start;
  Eigen::VectorXd v = base + kernel * t;
  double phi = objective(v);

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    sol.iterations = iter;
    const Eigen::VectorXd grad_full = f.grad_half_square(v);
    const Eigen::VectorXd grad = kernel.transpose() * grad_full;
    sol.residual = grad.norm();
    const double tol_abs = opts.tolerance * (1.0 + 2.0 * phi);
    if (sol.residual <= tol_abs) break;

    Eigen::VectorXd direction;
    bool have_newton = false;
    try {
      const FundamentalTensor gt = fundamental_tensor(f, v);
      const Eigen::MatrixXd hess = kernel.transpose() * gt.G * kernel;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
        direction = -ldlt.solve(grad);
        have_newton = true;
      }
    } catch (const StrongConvexityError&) {
      // fall through to plain descent
    }
    if (!have_newton) direction = -grad;

    // backtracking line search on F^2/2
    double step = 1.0;
    const double slope = grad.dot(direction);
    bool moved = false;
    for (int ls = 0; ls < 48; ++ls) {
      const Eigen::VectorXd t_new = t + step * direction;
      const Eigen::VectorXd v_new = base + kernel * t_new;
      const double phi_new = objective(v_new);
      if (phi_new <= phi + 1e-4 * step * slope) {
        t = t_new;
        v = v_new;
        phi = phi_new;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;  // step collapsed: already at the numerical floor
  }

  sol.point = v;
  sol.norm_value = f(v);
  const Eigen::VectorXd grad = kernel.transpose() * f.grad_half_square(v);
  sol.residual = grad.norm();
  if (sol.residual > opts.tolerance * (1.0 + 2.0 * phi) * 1e3) {
    std::ostringstream msg;
    msg << "fiber minimization did not converge (residual " << sol.residual
        << ", best norm value " << sol.norm_value << ")";
    throw NumericalError(msg.str());
  }
  return sol;
}

}  // namespace

double induced_norm(const MinkowskiNorm& f, const LinearSubmersion& l,
                    const Eigen::VectorXd& vbar, const FiberSolverOptions& opts) {
  if (f.dim() != l.source_dim()) throw InputError("induced_norm: norm and map dims differ");
  if (vbar.size() != l.target_dim()) throw InputError("induced_norm: target vector dim mismatch");
  if (vbar.norm() == 0.0) return 0.0;
  const Eigen::VectorXd base = l.min_norm_preimage(vbar);
  const Eigen::VectorXd t0 = Eigen::VectorXd::Zero(l.kernel().dim());
  return minimize_on_fiber(f, base, l.kernel().basis(), opts, t0).norm_value;
}

HorizontalLift horizontal_lift(const MinkowskiNorm& f, const LinearSubmersion& l,
                               const Eigen::VectorXd& ubar, const FiberSolverOptions& opts,
                               const std::optional<Eigen::VectorXd>& fiber_start) {
  if (f.dim() != l.source_dim()) throw InputError("horizontal_lift: norm and map dims differ");
  if (ubar.size() != l.target_dim()) throw InputError("horizontal_lift: target dim mismatch");
  if (ubar.norm() == 0.0) throw InputError("horizontal_lift: target vector must be nonzero");

  const Eigen::VectorXd base = l.min_norm_preimage(ubar);
  Eigen::VectorXd t0 = Eigen::VectorXd::Zero(l.kernel().dim());
  if (fiber_start) {
    if (fiber_start->size() != l.kernel().dim())
      throw InputError("horizontal_lift: fiber_start length must match kernel dim");
    t0 = *fiber_start;
  }
  const FiberSolution sol = minimize_on_fiber(f, base, l.kernel().basis(), opts, t0);

  HorizontalLift lift;
  lift.target_vector = ubar;
  lift.lift = sol.point;
  lift.certified_min = sol.norm_value;
  lift.iterations = sol.iterations;
  if (l.kernel().dim() > 0) {
    const FundamentalTensor gt = fundamental_tensor(f, sol.point);
    const Eigen::VectorXd pairings = l.kernel().basis().transpose() * (gt.G * sol.point);
    lift.orthogonality_residual = pairings.cwiseAbs().maxCoeff();
  }
  return lift;
}

MinkowskiNorm induced_norm_spec(const MinkowskiNorm& f, const LinearSubmersion& l) {
  if (f.dim() != l.source_dim()) throw InputError("induced_norm_spec: dims differ");
  FiberSolverOptions tight;
  tight.tolerance = 1e-13;  // finite differences of this norm need machine-floor values
  return MinkowskiNorm::custom(l.target_dim(), [f, l, tight](const Eigen::VectorXd& vbar) {
    return induced_norm(f, l, vbar, tight);
  });
}

IsometryReport isometry_check(const MinkowskiNorm& f, const LinearSubmersion& l,
                              const Eigen::VectorXd& ubar, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("isometry_check: trials must be >= 1");
  FiberSolverOptions tight;
  tight.tolerance = 1e-13;
  const HorizontalLift hl = horizontal_lift(f, l, ubar, tight);
  const FundamentalTensor gu = fundamental_tensor(f, hl.lift);

  // g_u-orthocomplement of ker l at the lift
  Eigen::MatrixXd horizontal;
  if (l.kernel().dim() == 0) {
    horizontal = Eigen::MatrixXd::Identity(l.source_dim(), l.source_dim());
  } else {
    horizontal = null_space(l.kernel().basis().transpose() * gu.G, gu.max_eigenvalue);
  }
  if (horizontal.cols() != l.target_dim())
    throw NumericalError("isometry_check: horizontal space has unexpected dimension");

  const MinkowskiNorm fbar = induced_norm_spec(f, l);
  const FundamentalTensor gbar = fundamental_tensor(fbar, ubar);

  Rng rng(seed);
  IsometryReport report;
  report.trials = trials;
  for (int n = 0; n < trials; ++n) {
    const Eigen::VectorXd w1 = horizontal * rng.sphere(static_cast<int>(horizontal.cols()));
    const Eigen::VectorXd w2 = horizontal * rng.sphere(static_cast<int>(horizontal.cols()));
    const double upstairs = w1.dot(gu.G * w2);
    const double downstairs = (l.apply(w1)).dot(gbar.G * l.apply(w2));
    report.max_discrepancy = std::max(report.max_discrepancy, std::abs(upstairs - downstairs));
  }
  return report;
}

}  // namespace negcurv

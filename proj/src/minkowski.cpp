#include "negcurv/minkowski.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "negcurv/errors.hpp"
#include "negcurv/rng.hpp"

namespace negcurv {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// First differences keep the classic cbrt(eps) step; second differences use
// eps^(1/4) so evaluation round-off does not swamp the quotient.
double grad_step(const Eigen::VectorXd& y) {
  return std::cbrt(kEps) * std::max(y.norm(), 1.0);
}

double hess_step(const Eigen::VectorXd& y) {
  return std::pow(kEps, 0.25) * std::max(y.norm(), 1.0);
}

void check_spd(const Eigen::MatrixXd& a, const char* who) {
  if (a.rows() != a.cols()) throw InputError(std::string(who) + ": matrix must be square");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * (1.0 + a.cwiseAbs().maxCoeff()))
    throw InputError(std::string(who) + ": matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw InputError(std::string(who) + ": matrix must be positive definite");
}

}  // namespace

MinkowskiNorm MinkowskiNorm::riemannian(Eigen::MatrixXd a) {
  check_spd(a, "riemannian norm");
  MinkowskiNorm f;
  f.dim_ = static_cast<int>(a.rows());
  f.family_ = NormFamily::Riemannian;
  f.a_ = std::move(a);
  return f;
}

MinkowskiNorm MinkowskiNorm::randers(Eigen::MatrixXd a, Eigen::VectorXd b) {
  check_spd(a, "randers norm");
  if (b.size() != a.rows()) throw InputError("randers norm: b length must match A");
  const double s = b.dot(a.ldlt().solve(b));
  if (!(s < 1.0 - 1e-9))
    throw InputError("randers norm: b' A^-1 b must stay below 1 - 1e-9 (got " +
                     std::to_string(s) + ")");
  MinkowskiNorm f;
  f.dim_ = static_cast<int>(a.rows());
  f.family_ = NormFamily::Randers;
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

MinkowskiNorm MinkowskiNorm::custom(int dim,
                                    std::function<double(const Eigen::VectorXd&)> evaluator) {
  if (dim <= 0) throw InputError("custom norm: dim must be positive");
  if (!evaluator) throw InputError("custom norm: evaluator must be callable");
  MinkowskiNorm f;
  f.dim_ = dim;
  f.family_ = NormFamily::Custom;
  f.evaluator_ = std::move(evaluator);
  return f;
}

double MinkowskiNorm::operator()(const Eigen::VectorXd& y) const {
  if (y.size() != dim_) throw InputError("norm evaluation: vector length mismatch");
  switch (family_) {
    case NormFamily::Riemannian:
      return std::sqrt(std::max(0.0, y.dot(a_ * y)));
    case NormFamily::Randers:
      return std::sqrt(std::max(0.0, y.dot(a_ * y))) + b_.dot(y);
    case NormFamily::Custom:
      return evaluator_(y);
  }
  return 0.0;
}

Eigen::VectorXd MinkowskiNorm::grad_half_square(const Eigen::VectorXd& y) const {
  if (y.size() != dim_) throw InputError("grad_half_square: vector length mismatch");
  switch (family_) {
    case NormFamily::Riemannian:
      return a_ * y;
    case NormFamily::Randers: {
      const double alpha = std::sqrt(std::max(0.0, y.dot(a_ * y)));
      if (alpha == 0.0) return Eigen::VectorXd::Zero(dim_);
      const Eigen::VectorXd ell = (a_ * y) / alpha;
      return (alpha + b_.dot(y)) * (ell + b_);
    }
    case NormFamily::Custom: {
      const double h = grad_step(y);
      Eigen::VectorXd g(dim_);
      Eigen::VectorXd probe = y;
      for (int i = 0; i < dim_; ++i) {
        probe[i] = y[i] + h;
        const double fp = evaluator_(probe);
        probe[i] = y[i] - h;
        const double fm = evaluator_(probe);
        probe[i] = y[i];
        g[i] = (fp * fp - fm * fm) / (4.0 * h);
      }
      return g;
    }
  }
  return Eigen::VectorXd::Zero(dim_);
}

const Eigen::MatrixXd& MinkowskiNorm::A() const {
  if (family_ == NormFamily::Custom) throw InputError("custom norm has no matrix A");
  return a_;
}

const Eigen::VectorXd& MinkowskiNorm::b() const {
  if (family_ != NormFamily::Randers) throw InputError("only Randers norms carry b");
  return b_;
}

FundamentalTensor fundamental_tensor(const MinkowskiNorm& f, const Eigen::VectorXd& y) {
  if (y.size() != f.dim()) throw InputError("fundamental_tensor: vector length mismatch");
  if (y.norm() == 0.0) throw InputError("fundamental_tensor: undefined at y = 0");

  FundamentalTensor t;
  t.base_y = y;
  switch (f.family()) {
    case NormFamily::Riemannian:
      t.G = f.A();
      break;
    case NormFamily::Randers: {
      const Eigen::MatrixXd& a = f.A();
      const Eigen::VectorXd& b = f.b();
      const double alpha = std::sqrt(std::max(0.0, y.dot(a * y)));
      const Eigen::VectorXd ell = (a * y) / alpha;
      const double value = alpha + b.dot(y);
      const Eigen::VectorXd lb = ell + b;
      t.G = (value / alpha) * (a - ell * ell.transpose()) + lb * lb.transpose();
      break;
    }
    case NormFamily::Custom: {
      const double h = hess_step(y);
      const int n = f.dim();
      const auto phi = [&f](const Eigen::VectorXd& v) {
        const double val = f(v);
        return 0.5 * val * val;
      };
      Eigen::MatrixXd g(n, n);
      Eigen::VectorXd probe = y;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          probe = y;
          probe[i] += h;
          probe[j] += h;
          const double pp = phi(probe);
          probe = y;
          probe[i] += h;
          probe[j] -= h;
          const double pm = phi(probe);
          probe = y;
          probe[i] -= h;
          probe[j] += h;
          const double mp = phi(probe);
          probe = y;
          probe[i] -= h;
          probe[j] -= h;
          const double mm = phi(probe);
          g(i, j) = (pp - pm - mp + mm) / (4.0 * h * h);
          g(j, i) = g(i, j);
        }
      t.G = 0.5 * (g + g.transpose());
      break;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.G);
  t.min_eigenvalue = es.eigenvalues().minCoeff();
  t.max_eigenvalue = es.eigenvalues().maxCoeff();
  if (t.min_eigenvalue <= 0.0) {
    std::ostringstream msg;
    msg << "fundamental tensor is not positive definite (min eigenvalue "
        << t.min_eigenvalue << ")";
    throw StrongConvexityError(t.min_eigenvalue, msg.str());
  }
  return t;
}

NormValidationReport validate_norm(const MinkowskiNorm& f, int samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("validate_norm: samples must be >= 1");
  const int n = f.dim();
  Rng rng(seed);

  std::vector<Eigen::VectorXd> probes;
  probes.reserve(2 * n + samples);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    probes.push_back(e);
    probes.push_back(-e);
  }
  for (int s = 0; s < samples; ++s) probes.push_back(rng.sphere(n));

  NormValidationReport report;
  report.samples = static_cast<int>(probes.size());
  report.min_value_on_sphere = std::numeric_limits<double>::infinity();
  report.worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  report.worst_direction = probes.front();

  const double lambdas[] = {0.5, 2.0, 7.0};
  bool convexity_ok = true;
  // FD Hessians of custom norms carry more noise than closed forms, so the
  // positive-definiteness margin is judged on a coarser scale there.
  const double pd_rel = f.family() == NormFamily::Custom ? 1e-5 : 1e-9;

  for (const auto& y : probes) {
    const double fy = f(y);
    report.min_value_on_sphere = std::min(report.min_value_on_sphere, fy);
    if (fy > 0.0) {
      for (double lambda : lambdas) {
        const double r = std::abs(f(lambda * y) - lambda * fy) / (lambda * fy);
        report.worst_homogeneity = std::max(report.worst_homogeneity, r);
      }
    }
    try {
      const FundamentalTensor t = fundamental_tensor(f, y);
      if (t.min_eigenvalue < report.worst_min_eigenvalue) {
        report.worst_min_eigenvalue = t.min_eigenvalue;
        report.worst_direction = y;
      }
      if (t.min_eigenvalue <= pd_rel * std::max(1.0, t.max_eigenvalue)) convexity_ok = false;
    } catch (const StrongConvexityError& e) {
      convexity_ok = false;
      if (e.min_eigenvalue < report.worst_min_eigenvalue) {
        report.worst_min_eigenvalue = e.min_eigenvalue;
        report.worst_direction = y;
      }
    }
  }

  report.homogeneity_ok = report.worst_homogeneity <= 1e-9;
  report.positivity_ok = report.min_value_on_sphere > 0.0;
  report.convexity_ok = convexity_ok;
  return report;
}

}  // namespace negcurv

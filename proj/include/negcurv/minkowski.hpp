#ifndef NEGCURV_MINKOWSKI_HPP
#define NEGCURV_MINKOWSKI_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace negcurv {

enum class NormFamily { Riemannian, Randers, Custom };

/// A Minkowski norm on R^n. Riemannian and Randers norms carry closed forms;
/// custom norms delegate to a user evaluator that must be smooth away from 0,
/// positively 1-homogeneous, and effect-free (it may be called concurrently).
class MinkowskiNorm {
 public:
  static MinkowskiNorm riemannian(Eigen::MatrixXd a);
  static MinkowskiNorm randers(Eigen::MatrixXd a, Eigen::VectorXd b);
  static MinkowskiNorm custom(int dim, std::function<double(const Eigen::VectorXd&)> evaluator);

  int dim() const { return dim_; }
  NormFamily family() const { return family_; }

  double operator()(const Eigen::VectorXd& y) const;
  double evaluate(const Eigen::VectorXd& y) const { return (*this)(y); }

  // gradient of F^2/2; closed form where available, central differences otherwise
  Eigen::VectorXd grad_half_square(const Eigen::VectorXd& y) const;

  const Eigen::MatrixXd& A() const;
  const Eigen::VectorXd& b() const;

 private:
  MinkowskiNorm() = default;

  int dim_ = 0;
  NormFamily family_ = NormFamily::Custom;
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  std::function<double(const Eigen::VectorXd&)> evaluator_;
};

struct FundamentalTensor {
  Eigen::VectorXd base_y;
  Eigen::MatrixXd G;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;

  double operator()(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(G * v);
  }
};

/// Hessian inner product of F^2/2 at y != 0. Throws InputError at y = 0 and
/// StrongConvexityError when the symmetrized Hessian is not positive definite.
FundamentalTensor fundamental_tensor(const MinkowskiNorm& f, const Eigen::VectorXd& y);

struct NormValidationReport {
  int samples = 0;
  double worst_homogeneity = 0.0;   // max |F(ly) - l F(y)| / (l F(y)) over probes
  double min_value_on_sphere = 0.0;
  double worst_min_eigenvalue = 0.0;
  Eigen::VectorXd worst_direction;  // probe attaining worst_min_eigenvalue
  bool homogeneity_ok = false;
  bool positivity_ok = false;
  bool convexity_ok = false;
  bool passed() const { return homogeneity_ok && positivity_ok && convexity_ok; }
};

// Audits the norm axioms at the +/- axis directions plus `samples` uniform
// sphere points. Failures are reported, never thrown.
NormValidationReport validate_norm(const MinkowskiNorm& f, int samples, std::uint64_t seed = 42);

}  // namespace negcurv

#endif

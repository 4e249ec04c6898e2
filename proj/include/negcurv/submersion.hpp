#ifndef NEGCURV_SUBMERSION_HPP
#define NEGCURV_SUBMERSION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"

namespace negcurv {

/// A surjective linear map between normed spaces. The kernel is computed once
/// at construction; the object is immutable afterwards.
class LinearSubmersion {
 public:
  explicit LinearSubmersion(Eigen::MatrixXd map);

  int source_dim() const { return static_cast<int>(map_.cols()); }
  int target_dim() const { return static_cast<int>(map_.rows()); }
  const Eigen::MatrixXd& map() const { return map_; }
  const Subspace& kernel() const { return kernel_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return map_ * v; }
  // Euclidean least-squares preimage, used as the solver start
  Eigen::VectorXd min_norm_preimage(const Eigen::VectorXd& vbar) const;

 private:
  Eigen::MatrixXd map_;
  Eigen::MatrixXd pinv_;
  Subspace kernel_;
};

struct FiberSolverOptions {
  int max_iterations = 200;
  // converged when |grad| <= tolerance * (1 + F(v)^2)
  double tolerance = 1e-10;
};

struct HorizontalLift {
  Eigen::VectorXd target_vector;
  Eigen::VectorXd lift;
  double certified_min = 0.0;          // F(lift)
  double orthogonality_residual = 0.0; // max_w |g_u(u, w)| over unit kernel basis w
  int iterations = 0;
};

/// inf { F(v) : l(v) = vbar }, by damped Newton on F^2/2 along the fiber.
double induced_norm(const MinkowskiNorm& f, const LinearSubmersion& l,
                    const Eigen::VectorXd& vbar, const FiberSolverOptions& opts = {});

/// The unique fiber point realizing the infimum, characterized by
/// g_u(u, ker l) = 0. `fiber_start` restarts the solver from
/// min_norm_preimage + kernel_basis * fiber_start.
HorizontalLift horizontal_lift(const MinkowskiNorm& f, const LinearSubmersion& l,
                               const Eigen::VectorXd& ubar, const FiberSolverOptions& opts = {},
                               const std::optional<Eigen::VectorXd>& fiber_start = std::nullopt);

/// The induced norm packaged as a Custom Minkowski norm (each evaluation runs
/// the fiber minimization), so fundamental tensors of the induced norm come
/// from the ordinary finite-difference path.
MinkowskiNorm induced_norm_spec(const MinkowskiNorm& f, const LinearSubmersion& l);

struct IsometryReport {
  double max_discrepancy = 0.0;
  int trials = 0;
};

/// Compares g_u on the g_u-orthocomplement of ker l with the fundamental
/// tensor of the induced norm at ubar, over random unit pairs.
IsometryReport isometry_check(const MinkowskiNorm& f, const LinearSubmersion& l,
                              const Eigen::VectorXd& ubar, int trials, std::uint64_t seed = 42);

}  // namespace negcurv

#endif

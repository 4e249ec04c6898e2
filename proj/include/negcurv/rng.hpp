#ifndef NEGCURV_RNG_HPP
#define NEGCURV_RNG_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>

namespace negcurv {

// Deterministic random source. Gaussians go through an explicit Box-Muller
// transform (no cached spare, no library distribution) so that a given seed
// produces the same stream on every platform and run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Eigen::VectorXd gaussian(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  // uniform on the Euclidean unit sphere
  Eigen::VectorXd sphere(int n) {
    Eigen::VectorXd v = gaussian(n);
    double nv = v.norm();
    while (nv < 1e-12) {
      v = gaussian(n);
      nv = v.norm();
    }
    return v / nv;
  }

  // random matrix with independent standard normal entries
  Eigen::MatrixXd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = normal();
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace negcurv

#endif

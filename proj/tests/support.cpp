#include "support.hpp"

#include "negcurv/errors.hpp"
#include "negcurv/linalg.hpp"

namespace negcurv::testing {

Eigen::MatrixXd derivation_space(const StructureConstants& g) {
  const int n = g.dim();
  // unknowns d(a, b) flattened column-major; one vector equation per (i < j)
  const int pairs = n * (n - 1) / 2;
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(pairs * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // d [e_i, e_j]_k-term: sum_m c(i,j,m) d(k,m)
        for (int m = 0; m < n; ++m) system(row + k, k + m * n) += g.c(i, j, m);
        // -[d e_i, e_j]_k-term: -sum_a d(a,i) c(a,j,k)
        for (int a = 0; a < n; ++a) system(row + k, a + i * n) -= g.c(a, j, k);
        // -[e_i, d e_j]_k-term: -sum_b d(b,j) c(i,b,k)
        for (int b = 0; b < n; ++b) system(row + k, b + j * n) -= g.c(i, b, k);
      }
      row += n;
    }
  return null_space(system, 1.0 + g.max_abs_c());
}

StructureConstants random_solvable(Rng& rng, const StructureConstants& nilpotent) {
  const int m = nilpotent.dim();
  const Eigen::MatrixXd basis = derivation_space(nilpotent);
  if (basis.cols() == 0) throw NumericalError("random_solvable: no derivations found");
  const Eigen::VectorXd coeffs = rng.gaussian(static_cast<int>(basis.cols()));
  const Eigen::VectorXd flat = basis * coeffs;
  const Eigen::MatrixXd d = Eigen::Map<const Eigen::MatrixXd>(flat.data(), m, m);

  StructureConstants g(m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (nilpotent.c(i, j, k) != 0.0) g.set_bracket(i + 1, j + 1, k + 1, nilpotent.c(i, j, k));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (d(k, j) != 0.0) g.set_bracket(0, j + 1, k + 1, d(k, j));
  return g;
}

StructureConstants random_solvable(Rng& rng, int index) {
  switch (index % 4) {
    case 0: {
      StructureConstants abelian3(3);
      return random_solvable(rng, abelian3);
    }
    case 1: {
      StructureConstants heis(3);
      heis.set_bracket(0, 1, 2, 1.0);
      return random_solvable(rng, heis);
    }
    case 2: {
      StructureConstants abelian2(2);
      return random_solvable(rng, abelian2);
    }
    default: {
      StructureConstants abelian4(4);
      return random_solvable(rng, abelian4);
    }
  }
}

Eigen::MatrixXd random_conjugation(Rng& rng, int dim, double strength) {
  return Eigen::MatrixXd::Identity(dim, dim) + strength * rng.gaussian_matrix(dim, dim);
}

Eigen::MatrixXd random_spd(Rng& rng, int dim, double spread) {
  const Eigen::MatrixXd m = rng.gaussian_matrix(dim, dim);
  return Eigen::MatrixXd::Identity(dim, dim) + spread * (m * m.transpose()) / dim;
}

MinkowskiNorm random_randers(Rng& rng, int dim, double beta_size) {
  const Eigen::MatrixXd a = random_spd(rng, dim);
  Eigen::VectorXd b = rng.gaussian(dim);
  const double norm_a_inv = std::sqrt(b.dot(a.ldlt().solve(b)));
  b *= beta_size / std::max(norm_a_inv, 1e-12);
  return MinkowskiNorm::randers(a, b);
}

Eigen::MatrixXd matrix_with_real_parts(Rng& rng, const std::vector<double>& real_parts) {
  const int n = static_cast<int>(real_parts.size());
  Eigen::MatrixXd core = Eigen::MatrixXd::Zero(n, n);
  int i = 0;
  while (i < n) {
    if (i + 1 < n && rng.uniform() < 0.5) {
      // conjugate pair with a shared real part
      const double re = real_parts[i];
      const double im = rng.uniform(0.2, 2.0);
      core(i, i) = re;
      core(i + 1, i + 1) = re;
      core(i, i + 1) = -im;
      core(i + 1, i) = im;
      i += 2;
    } else {
      core(i, i) = real_parts[i];
      ++i;
    }
  }
  const Eigen::MatrixXd p = random_conjugation(rng, n, 0.3);
  return p * core * p.inverse();
}

}  // namespace negcurv::testing

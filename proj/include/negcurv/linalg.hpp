#ifndef NEGCURV_LINALG_HPP
#define NEGCURV_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace negcurv {

// Relative SVD threshold used for all rank decisions.
inline constexpr double kRankRelTol = 1e-10;

// Orthonormal basis of the column span of `vectors`. Singular values are kept
// when above rel_tol * max(sigma_max, scale_floor); the floor keeps round-off
// columns out of spans that are mathematically zero.
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& vectors, double scale_floor = 1.0,
                                 double rel_tol = kRankRelTol);

// Orthonormal basis of the kernel of m (right null space).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double scale_floor = 1.0,
                           double rel_tol = kRankRelTol);

int numerical_rank(const Eigen::MatrixXd& m, double scale_floor = 1.0,
                   double rel_tol = kRankRelTol);

// sigma_max / sigma_min; infinity for rank-deficient input.
double condition_number(const Eigen::MatrixXd& m);

// Eigenvalues of a real square matrix, unordered, with multiplicity.
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m);

// Scaling-and-squaring matrix exponential (backed by Eigen).
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& m);

// Whether two complex multisets match under an optimal pairing with per-pair
// distance at most tol. Exact decision via bipartite matching.
bool multisets_match(const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b, double tol);

// Greedy upper bound on the optimal pairing distance; handy for reports.
double multiset_distance(const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b);

}  // namespace negcurv

#endif

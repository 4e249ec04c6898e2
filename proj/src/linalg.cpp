#include "negcurv/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <limits>

#include "negcurv/errors.hpp"

namespace negcurv {

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& vectors, double scale_floor,
                                 double rel_tol) {
  if (vectors.cols() == 0) return Eigen::MatrixXd(vectors.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(sv.size() > 0 ? sv[0] : 0.0, scale_floor);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double scale_floor, double rel_tol) {
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(sv.size() > 0 ? sv[0] : 0.0, scale_floor);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

int numerical_rank(const Eigen::MatrixXd& m, double scale_floor, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(sv.size() > 0 ? sv[0] : 0.0, scale_floor);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

double condition_number(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return std::numeric_limits<double>::infinity();
  const double smin = sv[sv.size() - 1];
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InputError("eigenvalues: matrix must be square");
  if (m.rows() == 0) return {};
  if (!m.allFinite()) throw NumericalError("eigenvalues: matrix has non-finite entries");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    std::string msg = "eigenvalue iteration failed to converge for matrix:";
    for (int i = 0; i < m.rows(); ++i) {
      msg += "\n ";
      for (int j = 0; j < m.cols(); ++j) msg += " " + std::to_string(m(i, j));
    }
    throw NumericalError(msg);
  }
  std::vector<std::complex<double>> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InputError("matrix_exp: matrix must be square");
  return m.exp();
}

namespace {

// Kuhn augmenting-path matching on the graph {(i,j) : |a_i - b_j| <= tol}.
bool try_augment(int i, const std::vector<std::vector<int>>& adj, std::vector<int>& match_b,
                 std::vector<char>& visited) {
  for (int j : adj[i]) {
    if (visited[j]) continue;
    visited[j] = 1;
    if (match_b[j] < 0 || try_augment(match_b[j], adj, match_b, visited)) {
      match_b[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

bool multisets_match(const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(a[i] - b[j]) <= tol) adj[i].push_back(j);
  std::vector<int> match_b(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<char> visited(n, 0);
    if (!try_augment(i, adj, match_b, visited)) return false;
  }
  return true;
}

double multiset_distance(const std::vector<std::complex<double>>& a,
                         const std::vector<std::complex<double>>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<std::complex<double>> rest = b;
  double worst = 0.0;
  for (const auto& x : a) {
    if (rest.empty()) break;
    auto best = rest.begin();
    double bd = std::abs(x - *best);
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      const double d = std::abs(x - *it);
      if (d < bd) {
        bd = d;
        best = it;
      }
    }
    worst = std::max(worst, bd);
    rest.erase(best);
  }
  return worst;
}

}  // namespace negcurv

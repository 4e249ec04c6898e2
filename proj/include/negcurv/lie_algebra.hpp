#ifndef NEGCURV_LIE_ALGEBRA_HPP
#define NEGCURV_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "negcurv/linalg.hpp"

namespace negcurv {

/// A finite-dimensional real Lie algebra given by structure constants over a
/// fixed basis: [e_i, e_j] = sum_k c(i,j,k) e_k. The tensor is stored raw, so
/// antisymmetry violations survive until validate() looks at them.
class StructureConstants {
 public:
  explicit StructureConstants(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }

  double c(int i, int j, int k) const { return ad_[i](k, j); }

  // Raw entry; does not touch c(j,i,k).
  void set_c(int i, int j, int k, double value);

  // Sets c(i,j,k) = value and c(j,i,k) = -value.
  void set_bracket(int i, int j, int k, double value);

  // Matrix of ad(e_i): column j holds the coordinates of [e_i, e_j].
  const Eigen::MatrixXd& ad_basis(int i) const { return ad_[i]; }

  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  double max_abs_c() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  int dim_;
  std::vector<Eigen::MatrixXd> ad_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  double antisymmetry_tolerance = 0.0;
  double jacobi_tolerance = 0.0;
  bool antisymmetry_ok = false;
  bool jacobi_ok = false;
  bool passed() const { return antisymmetry_ok && jacobi_ok; }
};

/// A linear subspace of R^n held as an orthonormal column basis. Rank
/// decisions happen once, in span(), through an SVD cut.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // the zero subspace
  static Subspace span(const Eigen::MatrixXd& vectors, double scale_floor = 1.0);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  bool is_zero() const { return basis_.cols() == 0; }
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::VectorXd project(const Eigen::VectorXd& v) const;
  double distance_from(const Eigen::VectorXd& v) const;
  // max over the other space's basis vectors of their distance from this space
  double containment_residual(const Subspace& inner) const;

 private:
  int ambient_dim_;
  Eigen::MatrixXd basis_;
};

/// Coordinates for numerator/denominator, i.e. the projection l^i -> l^i/l^j.
/// Quotient coordinates live on the orthogonal complement of the denominator
/// inside the numerator, which makes the projection explicit and testable.
class QuotientMap {
 public:
  QuotientMap(Subspace numerator, Subspace denominator);

  const Subspace& numerator() const { return numerator_; }
  const Subspace& denominator() const { return denominator_; }
  int quotient_dim() const { return static_cast<int>(projection_.rows()); }

  // quotient_dim x ambient_dim, sends ambient coordinates to quotient ones
  const Eigen::MatrixXd& projection() const { return projection_; }
  // ambient_dim x quotient_dim section; projection() * representative() = I
  const Eigen::MatrixXd& representative() const { return representative_; }

  Eigen::VectorXd project(const Eigen::VectorXd& v) const { return projection_ * v; }

 private:
  Subspace numerator_;
  Subspace denominator_;
  Eigen::MatrixXd projection_;
  Eigen::MatrixXd representative_;
};

struct LinearEndomorphism {
  Eigen::MatrixXd matrix;
  int dim() const { return static_cast<int>(matrix.rows()); }
};

struct Spectrum {
  std::vector<std::complex<double>> values;

  int size() const { return static_cast<int>(values.size()); }
  double min_real() const;
  double spectral_radius() const;
};

Eigen::VectorXd bracket(const StructureConstants& g, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y);

ValidationReport validate(const StructureConstants& g);

// [l^0, l^1, ...] down to the first zero term, where l^0 = [g, g] and
// l^i = [l^0, l^{i-1}]. Throws NumericalError when l^0 is not nilpotent.
std::vector<Subspace> descending_sequence(const StructureConstants& g);

// g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... including the full algebra as first term.
std::vector<Subspace> derived_series(const StructureConstants& g);

bool is_solvable(const StructureConstants& g);

// The endomorphism induced by ad(y0) on numerator/denominator coordinates.
// Requires both spaces to be ad(y0)-invariant.
LinearEndomorphism induced_endomorphism(const StructureConstants& g, const Eigen::VectorXd& y0,
                                        const QuotientMap& q, double verify_tol = 1e-9);

Spectrum spectrum(const LinearEndomorphism& a);

Eigen::MatrixXd killing_form(const StructureConstants& g);

// Structure constants of the same algebra in the basis formed by the columns
// of p. Throws InputError when p is numerically singular.
StructureConstants change_basis(const StructureConstants& g, const Eigen::MatrixXd& p);

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace negcurv

#endif

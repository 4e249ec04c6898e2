#include "negcurv/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "negcurv/errors.hpp"

namespace negcurv {

StructureConstants::StructureConstants(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (dim <= 0) throw InputError("StructureConstants: dim must be positive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
    throw InputError("StructureConstants: label count must match dim");
  ad_.assign(dim, Eigen::MatrixXd::Zero(dim, dim));
}

void StructureConstants::set_c(int i, int j, int k, double value) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw InputError("StructureConstants::set_c: index out of range");
  ad_[i](k, j) = value;
}

void StructureConstants::set_bracket(int i, int j, int k, double value) {
  if (i == j && value != 0.0)
    throw InputError("StructureConstants::set_bracket: [e_i, e_i] must vanish");
  set_c(i, j, k, value);
  set_c(j, i, k, -value);
}

Eigen::MatrixXd StructureConstants::ad(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw InputError("ad: vector length does not match dim");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) m += x[i] * ad_[i];
  return m;
}

Eigen::VectorXd StructureConstants::bracket(const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw InputError("bracket: vector length does not match dim");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) out.noalias() += x[i] * (ad_[i] * y);
  return out;
}

double StructureConstants::max_abs_c() const {
  double m = 0.0;
  for (const auto& a : ad_) m = std::max(m, a.cwiseAbs().maxCoeff());
  return m;
}

void StructureConstants::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != dim_)
    throw InputError("set_labels: label count must match dim");
  labels_ = std::move(labels);
}

Eigen::VectorXd bracket(const StructureConstants& g, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& y) {
  return g.bracket(x, y);
}

ValidationReport validate(const StructureConstants& g) {
  const int n = g.dim();
  const double cmax = g.max_abs_c();
  ValidationReport report;
  report.antisymmetry_tolerance = 1e-12 * (1.0 + cmax);
  report.jacobi_tolerance = 1e-9 * std::pow(1.0 + cmax, 3);

  double anti = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) anti = std::max(anti, std::abs(g.c(i, j, k) + g.c(j, i, k)));
  report.antisymmetry_residual = anti;
  report.antisymmetry_ok = anti <= report.antisymmetry_tolerance;

  double jac = 0.0;
  Eigen::VectorXd ei = Eigen::VectorXd::Zero(n), ej = Eigen::VectorXd::Zero(n),
                  ek = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    ei.setZero();
    ei[i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      ej.setZero();
      ej[j] = 1.0;
      for (int k = j + 1; k < n; ++k) {
        ek.setZero();
        ek[k] = 1.0;
        const Eigen::VectorXd r = g.bracket(ei, g.bracket(ej, ek)) +
                                  g.bracket(ej, g.bracket(ek, ei)) +
                                  g.bracket(ek, g.bracket(ei, ej));
        jac = std::max(jac, r.cwiseAbs().maxCoeff());
      }
    }
  }
  report.jacobi_residual = jac;
  report.jacobi_ok = jac <= report.jacobi_tolerance;
  return report;
}

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim <= 0) throw InputError("Subspace: ambient dim must be positive");
  basis_ = Eigen::MatrixXd(ambient_dim, 0);
}

Subspace Subspace::span(const Eigen::MatrixXd& vectors, double scale_floor) {
  Subspace s(static_cast<int>(vectors.rows()));
  s.basis_ = orthonormal_span(vectors, scale_floor);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Eigen::MatrixXd::Identity(ambient_dim, ambient_dim);
  return s;
}

Eigen::VectorXd Subspace::project(const Eigen::VectorXd& v) const {
  if (v.size() != ambient_dim_) throw InputError("Subspace::project: dimension mismatch");
  if (is_zero()) return Eigen::VectorXd::Zero(ambient_dim_);
  return basis_ * (basis_.transpose() * v);
}

double Subspace::distance_from(const Eigen::VectorXd& v) const {
  return (v - project(v)).norm();
}

double Subspace::containment_residual(const Subspace& inner) const {
  if (inner.ambient_dim() != ambient_dim_)
    throw InputError("containment_residual: ambient dims differ");
  double worst = 0.0;
  for (int j = 0; j < inner.dim(); ++j)
    worst = std::max(worst, distance_from(inner.basis().col(j)));
  return worst;
}

QuotientMap::QuotientMap(Subspace numerator, Subspace denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_.ambient_dim() != denominator_.ambient_dim())
    throw InputError("QuotientMap: ambient dims differ");
  if (numerator_.containment_residual(denominator_) > 1e-9)
    throw InputError("QuotientMap: denominator is not contained in numerator");

  const auto& nb = numerator_.basis();
  Eigen::MatrixXd complement = nb;
  if (!denominator_.is_zero()) {
    const auto& db = denominator_.basis();
    complement = nb - db * (db.transpose() * nb);
  }
  representative_ = orthonormal_span(complement);
  projection_ = representative_.transpose();
  if (static_cast<int>(projection_.rows()) != numerator_.dim() - denominator_.dim())
    throw NumericalError("QuotientMap: quotient dimension came out wrong");
}

double Spectrum::min_real() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& z : values) m = std::min(m, z.real());
  return m;
}

double Spectrum::spectral_radius() const {
  double m = 0.0;
  for (const auto& z : values) m = std::max(m, std::abs(z));
  return m;
}

namespace {

// span of all brackets [a_col, b_col] over the column pairs of two bases
Subspace bracket_span(const StructureConstants& g, const Eigen::MatrixXd& a,
                      const Eigen::MatrixXd& b) {
  const int n = g.dim();
  Eigen::MatrixXd cols(n, a.cols() * b.cols());
  int idx = 0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) cols.col(idx++) = g.bracket(a.col(i), b.col(j));
  if (idx == 0) return Subspace(n);
  return Subspace::span(cols, 1.0 + g.max_abs_c());
}

}  // namespace

std::vector<Subspace> descending_sequence(const StructureConstants& g) {
  const int n = g.dim();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  std::vector<Subspace> seq;
  seq.push_back(bracket_span(g, id, id));  // l^0 = [g, g]
  while (!seq.back().is_zero()) {
    const Subspace next = bracket_span(g, seq.front().basis(), seq.back().basis());
    if (!next.is_zero() && next.dim() >= seq.back().dim())
      throw NumericalError(
          "descending_sequence: l0 not nilpotent (series fails to reach zero)");
    if (static_cast<int>(seq.size()) > n)
      throw NumericalError(
          "descending_sequence: l0 not nilpotent (no zero term within dim steps)");
    seq.push_back(next);
  }
  return seq;
}

std::vector<Subspace> derived_series(const StructureConstants& g) {
  std::vector<Subspace> series;
  series.push_back(Subspace::full(g.dim()));
  while (!series.back().is_zero()) {
    const Subspace next = bracket_span(g, series.back().basis(), series.back().basis());
    if (!next.is_zero() && next.dim() >= series.back().dim()) break;  // stabilized above zero
    series.push_back(next);
  }
  return series;
}

bool is_solvable(const StructureConstants& g) {
  return derived_series(g).back().is_zero();
}

LinearEndomorphism induced_endomorphism(const StructureConstants& g, const Eigen::VectorXd& y0,
                                        const QuotientMap& q, double verify_tol) {
  if (y0.size() != g.dim()) throw InputError("induced_endomorphism: y0 has wrong length");
  const Eigen::MatrixXd ady = g.ad(y0);
  const double scale = 1.0 + ady.cwiseAbs().maxCoeff();
  const double inv_tol = 1e-8 * scale;

  const auto check_invariant = [&](const Subspace& s, const char* name) {
    for (int j = 0; j < s.dim(); ++j) {
      const Eigen::VectorXd image = ady * s.basis().col(j);
      if (s.distance_from(image) > inv_tol) {
        std::ostringstream msg;
        msg << "induced_endomorphism: subspace not ad-invariant (" << name
            << ", residual " << s.distance_from(image) << ")";
        throw PreconditionError(msg.str());
      }
    }
  };
  check_invariant(q.numerator(), "numerator");
  if (!q.denominator().is_zero()) check_invariant(q.denominator(), "denominator");

  const Eigen::MatrixXd m = q.projection() * ady * q.representative();

  // defining property M pr(v) = pr([y0, v]) on the numerator basis
  const auto& nb = q.numerator().basis();
  for (int j = 0; j < nb.cols(); ++j) {
    const Eigen::VectorXd lhs = m * q.project(nb.col(j));
    const Eigen::VectorXd rhs = q.project(ady * nb.col(j));
    if ((lhs - rhs).norm() > verify_tol * scale)
      throw NumericalError("induced_endomorphism: defining identity failed verification");
  }
  return LinearEndomorphism{m};
}

Spectrum spectrum(const LinearEndomorphism& a) {
  return Spectrum{eigenvalues(a.matrix)};
}

Eigen::MatrixXd killing_form(const StructureConstants& g) {
  const int n = g.dim();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      b(i, j) = (g.ad_basis(i) * g.ad_basis(j)).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

StructureConstants change_basis(const StructureConstants& g, const Eigen::MatrixXd& p) {
  const int n = g.dim();
  if (p.rows() != n || p.cols() != n) throw InputError("change_basis: matrix must be dim x dim");
  const double cond = condition_number(p);
  if (!std::isfinite(cond) || cond > 1e14) {
    std::ostringstream msg;
    msg << "change_basis: matrix is numerically singular (condition number " << cond << ")";
    throw InputError(msg.str());
  }
  const Eigen::MatrixXd pinv = p.inverse();
  StructureConstants out(n, g.labels());
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd ad_new = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
      if (p(a, i) != 0.0) ad_new += p(a, i) * g.ad_basis(a);
    ad_new = pinv * ad_new * p;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set_c(i, j, k, ad_new(k, j));
  }
  return out;
}

bool spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  return multisets_match(a.values, b.values, tol);
}

}  // namespace negcurv

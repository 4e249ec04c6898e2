#ifndef NEGCURV_ERRORS_HPP
#define NEGCURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace negcurv {

// Malformed user input: dimension mismatches, bad files, invalid parameters.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An iterative method failed to converge or produced non-finite values.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical hypothesis required by an operation does not hold for the data.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fundamental tensor came out non positive definite.
struct StrongConvexityError : NumericalError {
  double min_eigenvalue;
  explicit StrongConvexityError(double min_eig, const std::string& what)
      : NumericalError(what), min_eigenvalue(min_eig) {}
};

// The homogeneous curvature formula was asked for a flag outside its hypotheses.
// Carries the measured residuals so borderline flags can be audited.
struct FlagNotApplicableError : PreconditionError {
  double commuting_residual;
  double orthogonality_residual;
  FlagNotApplicableError(double commuting, double orthogonality, const std::string& what)
      : PreconditionError(what),
        commuting_residual(commuting),
        orthogonality_residual(orthogonality) {}
};

}  // namespace negcurv

#endif

#ifndef NEGCURV_TESTS_SUPPORT_HPP
#define NEGCURV_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include "negcurv/lie_algebra.hpp"
#include "negcurv/minkowski.hpp"
#include "negcurv/rng.hpp"

namespace negcurv::testing {

// Orthonormal basis of the derivation algebra of g: all matrices d with
// d[x, y] = [d x, y] + [x, d y], found by solving the linear constraints.
Eigen::MatrixXd derivation_space(const StructureConstants& g);

// Semidirect product n ⋊ R·d of a nilpotent algebra with a random derivation
// d of n. Solvable and Jacobi-clean by construction; new basis vector first.
StructureConstants random_solvable(Rng& rng, const StructureConstants& nilpotent);

// Rotates through small nilpotent seeds (abelian and Heisenberg) to produce a
// varied stream of random solvable algebras.
StructureConstants random_solvable(Rng& rng, int index);

// Well-conditioned random basis change: I + small gaussian perturbation.
Eigen::MatrixXd random_conjugation(Rng& rng, int dim, double strength = 0.25);

Eigen::MatrixXd random_spd(Rng& rng, int dim, double spread = 0.5);

MinkowskiNorm random_randers(Rng& rng, int dim, double beta_size = 0.4);

// Matrix with prescribed eigenvalue real parts: block-triangular-free
// similarity of a block-diagonal real form with the given complex spectrum.
Eigen::MatrixXd matrix_with_real_parts(Rng& rng, const std::vector<double>& real_parts);

}  // namespace negcurv::testing

#endif
